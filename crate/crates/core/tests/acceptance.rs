//! Exact end-to-end acceptance checks. Runs without the libtest harness so
//! that every check prints one PASS/FAIL line; exits nonzero on any failure.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use vonstaudt::symbolic::{
    factored_monomials, factorization, psi_full_expansion, shifted_binomial_parity, sign_case_holds,
    step_two_parities, three_in_t1_exponents, verify_factorization, verify_psi_identity, FactorizationCache,
    SubsetSplit,
};
use vonstaudt::vonstaudt::{
    castelnuovo_check, dual_configuration, perturb_vertex, sample_instance, sample_instance_with, verify_instance,
    verify_instance_with, SampleOptions, VerifyOptions, VonStaudtInstance,
};
use vonstaudt::wdn::{enumerate_psi_indices, lies_on_rnc, psi_eval, wdn_membership, PsiIndex, WdnOptions};
use vonstaudt::{Configuration, FieldSpec, ProjectivePoint};

type Outcome = Result<String, String>;

const Q: FieldSpec = FieldSpec::Rationals;
const INSTANCES: u64 = 50;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f101() -> FieldSpec {
    FieldSpec::prime(101).unwrap()
}

/// The first `count` seeds from 0 that give an instance in general linear
/// position, plus how many seeds were rejected on the way.
fn instances(d: usize, field: FieldSpec, count: u64) -> Result<(Vec<VonStaudtInstance>, u64), String> {
    let mut out = Vec::new();
    let mut rejected = 0;
    let mut seed = 0;
    while (out.len() as u64) < count {
        match sample_instance(d, field, seed) {
            Ok(inst) => out.push(inst),
            Err(vonstaudt::Error::DegenerateSample { .. }) if field != Q => rejected += 1,
            Err(e) => return Err(format!("d={d} seed {seed}: {e}")),
        }
        seed += 1;
    }
    Ok((out, rejected))
}

/// Every instance verifies with all equations exactly zero.
fn check_all_verify(d: usize, field: FieldSpec, limit: Duration) -> Result<String, String> {
    let (insts, rejected) = instances(d, field, INSTANCES)?;
    let mut slowest = Duration::ZERO;
    for inst in &insts {
        let start = Instant::now();
        let cert = verify_instance(inst, false);
        slowest = slowest.max(start.elapsed());
        ensure(cert.verdict && cert.glp_ok && cert.psi_zero == cert.psi_total && cert.psi_failures.is_empty(), || {
            format!("d={d} seed {:?}: {} of {} equations zero", inst.seed(), cert.psi_zero, cert.psi_total)
        })?;
    }
    ensure(slowest < limit, || format!("d={d}: slowest instance {slowest:.2?} exceeds {limit:?}"))?;
    let total = insts.first().map_or(0, |i| verify_instance(i, false).psi_total);
    let skipped = if rejected > 0 { format!(", {rejected} degenerate seeds skipped") } else { String::new() };
    Ok(format!("d={d}: {} x {total} equations, slowest {slowest:.2?}{skipped}", insts.len()))
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    for d in 2..=4 {
        notes.push(check_all_verify(d, Q, Duration::from_secs(1))?);
    }
    notes.push(check_all_verify(5, Q, Duration::from_secs(60))?);

    let inst = sample_instance(6, Q, 0).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let opts = VerifyOptions { castelnuovo: false, wdn: WdnOptions { sample: Some((2000, 7)), parallel: false } };
    let cert = verify_instance_with(&inst, &opts);
    let took = start.elapsed();
    ensure(cert.verdict && cert.psi_total == 2000 && cert.psi_zero == 2000, || format!("d=6 sampled: {cert:?}"))?;
    ensure(took < Duration::from_secs(60), || format!("d=6 sampled took {took:.2?}"))?;
    notes.push(format!("d=6: 2000 sampled equations in {took:.2?}"));
    Ok(notes.join("; "))
}

fn criterion_2() -> Outcome {
    let all = enumerate_psi_indices(3, 8).map_err(|e| e.to_string())?;
    ensure(all.len() == 56, || format!("{} indices", all.len()))?;
    let idx = PsiIndex::new(3, 8, (1..=7).collect(), (1..=6).collect()).map_err(|e| e.to_string())?;
    ensure(all.contains(&idx), || "example index missing".into())?;
    let shown = idx.to_string();
    let expected = "|4567||2367||1357||1247| - |3567||2467||1457||1237|";
    ensure(shown == expected, || format!("rendered {shown}"))?;
    Ok(format!("56 indices, {shown}"))
}

/// The eight factorizations printed for the d = 3 example.
const EXAMPLE_LINES: [([usize; 4], &str); 8] = [
    ([4, 5, 6, 7], "-|Q5Q6||Q5Q7||Q6Q7||Q1Q8||Q2Q8||Q3Q8|"),
    ([2, 3, 6, 7], "|Q2Q3||Q6Q7||Q1Q5||Q1Q8||Q4Q5||Q4Q8|"),
    ([1, 3, 5, 7], "|Q1Q3||Q5Q7||Q2Q6||Q2Q8||Q4Q6||Q4Q8|"),
    ([1, 2, 4, 7], "-|Q1Q2||Q1Q4||Q2Q4||Q3Q5||Q3Q6||Q3Q8|"),
    ([3, 5, 6, 7], "-|Q5Q6||Q5Q7||Q6Q7||Q1Q8||Q2Q8||Q4Q8|"),
    ([2, 4, 6, 7], "|Q2Q4||Q6Q7||Q1Q5||Q1Q8||Q3Q5||Q3Q8|"),
    ([1, 4, 5, 7], "|Q1Q4||Q5Q7||Q2Q6||Q2Q8||Q3Q6||Q3Q8|"),
    ([1, 2, 3, 7], "-|Q1Q2||Q1Q3||Q2Q3||Q4Q5||Q4Q6||Q4Q8|"),
];

/// Parses a printed factorization into its sign and factor multiset.
fn parse_line(line: &str) -> (i8, BTreeMap<(usize, usize), usize>) {
    let (sign, body) = match line.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, line),
    };
    let mut factors = BTreeMap::new();
    for pair in body.split('|').filter(|s| !s.is_empty()) {
        let nums: Vec<usize> = pair.split('Q').filter(|s| !s.is_empty()).map(|s| s.parse().unwrap()).collect();
        *factors.entry((nums[0].min(nums[1]), nums[0].max(nums[1]))).or_insert(0) += 1;
    }
    (sign, factors)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for d in [2, 3] {
        let all = SubsetSplit::all(d);
        let expected = if d == 2 { 20 } else { 70 };
        ensure(all.len() == expected, || format!("d={d}: {} subsets", all.len()))?;
        if let Some(bad) = all.iter().find(|s| !verify_factorization(s)) {
            return Err(format!("d={d}: factorization of {:?} fails", bad.k()));
        }
    }
    for (k, line) in EXAMPLE_LINES {
        let split = SubsetSplit::new(3, k.to_vec()).map_err(|e| e.to_string())?;
        let label = factorization(&split).label();
        ensure(label == line, || format!("{k:?}: got {label}, expected {line}"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {took:.2?}"))?;
    Ok(format!("20 + 70 subsets, 8 example lines match, {took:.2?}"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let conic = enumerate_psi_indices(2, 6).map_err(|e| e.to_string())?;
    ensure(conic.len() == 1, || format!("{} indices for d=2", conic.len()))?;
    ensure(psi_full_expansion(2, &conic[0]).map_err(|e| e.to_string())?.is_zero(), || "d=2 expansion nonzero".into())?;
    ensure(verify_psi_identity(2, &conic[0]).map_err(|e| e.to_string())?, || "d=2 identity".into())?;

    let all = enumerate_psi_indices(3, 8).map_err(|e| e.to_string())?;
    for idx in &all {
        ensure(verify_psi_identity(3, idx).map_err(|e| e.to_string())?, || format!("{idx} fails"))?;
    }

    // the worked example, rebuilt from the printed lines alone
    let product = |ks: &[[usize; 4]]| {
        let mut sign = 1i8;
        let mut factors = BTreeMap::new();
        for k in ks {
            let (_, line) = EXAMPLE_LINES.iter().find(|(kk, _)| kk == k).unwrap();
            let (s, f) = parse_line(line);
            sign *= s;
            for (pair, m) in f {
                *factors.entry(pair).or_insert(0) += m;
            }
        }
        (sign, factors)
    };
    let printed1 = product(&[[4, 5, 6, 7], [2, 3, 6, 7], [1, 3, 5, 7], [1, 2, 4, 7]]);
    let printed2 = product(&[[3, 5, 6, 7], [2, 4, 6, 7], [1, 4, 5, 7], [1, 2, 3, 7]]);
    ensure(printed1 == printed2, || "printed monomials differ".into())?;
    let idx = PsiIndex::new(3, 8, (1..=7).collect(), (1..=6).collect()).map_err(|e| e.to_string())?;
    let [m1, m2] = factored_monomials(3, &idx, &mut FactorizationCache::new())
        .map_err(|e| e.to_string())?
        .ok_or("example factorizations fail")?;
    ensure((m1.sign, m1.factors.clone()) == printed1 && (m2.sign, m2.factors) == printed2, || {
        "computed monomials differ from printed ones".into()
    })?;

    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:.2?}"))?;
    Ok(format!("d=2 expansion + 56 d=3 identities, example reproduced, {took:.2?}"))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for d in 3..=5 {
        let n = 2 * d + 2;
        for idx in enumerate_psi_indices(d, n).map_err(|e| e.to_string())? {
            ensure(step_two_parities(&idx) == [0, 0], || format!("d={d} {idx}: parities {:?}", step_two_parities(&idx)))?;
            ensure(sign_case_holds(&idx), || format!("d={d} {idx}: sign case fails"))?;
            checked += 1;
        }
        for p in 0..=d.saturating_sub(2) {
            let (a, b) = three_in_t1_exponents(d, p);
            ensure(a == b, || format!("d={d} p={p}: exponents {a} vs {b}"))?;
        }
    }
    for l in -50..=50 {
        ensure(shifted_binomial_parity(l) == 1, || format!("C(l,2)+C(l+2,2) even at l={l}"))?;
    }
    Ok(format!("{checked} indices over d=3,4,5 (every J and I)"))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for d in 2..=5 {
        let (insts, _) = instances(d, Q, INSTANCES)?;
        for inst in &insts {
            let cert = verify_instance(inst, true);
            ensure(cert.castelnuovo_ok == Some(true) && cert.verdict, || format!("d={d} seed {:?}", inst.seed()))?;
            ensure(castelnuovo_check(inst.vertices()), || format!("d={d} seed {:?}", inst.seed()))?;
            count += 1;
        }
    }
    Ok(format!("{count} instances, d=2..5"))
}

fn criterion_7() -> Outcome {
    for d in 2..=4 {
        let (insts, _) = instances(d, Q, 20)?;
        for inst in &insts {
            let dual = dual_configuration(inst);
            ensure(dual.len() == 2 * d + 2, || "dual size".into())?;
            ensure(lies_on_rnc(&dual).map_err(|e| e.to_string())?, || format!("d={d} seed {:?}", inst.seed()))?;
        }
    }
    Ok("60 dual configurations lie on curves".into())
}

/// Replaces one vertex per trial and requires a nonzero equation.
fn negative_controls(d: usize, field: FieldSpec) -> Result<String, String> {
    let (insts, _) = instances(d, field, 20)?;
    let mut failing = 0usize;
    for (trial, inst) in insts.iter().enumerate() {
        let vertex = trial % (2 * d + 2);
        let moved = perturb_vertex(inst, vertex, 1000 + trial as u64, 20).map_err(|e| e.to_string())?;
        let cert = verify_instance(&moved, false);
        ensure(cert.glp_ok, || format!("d={d} trial {trial}: replacement broke general position"))?;
        ensure(!cert.verdict && !cert.psi_failures.is_empty(), || format!("d={d} trial {trial}: still verifies"))?;
        let first = &cert.psi_failures[0];
        ensure(!psi_eval(moved.vertices(), first).map_err(|e| e.to_string())?.is_zero(), || {
            format!("d={d} trial {trial}: reported failure evaluates to zero")
        })?;
        failing += cert.psi_failures.len();
    }
    Ok(format!("d={d}: 20/20 fail ({failing} nonzero equations)"))
}

/// 2d+2 points on the hyperplane x_d = 0: every bracket vanishes.
fn coplanar(d: usize, field: FieldSpec) -> Configuration {
    let pts = (0..2 * d + 2)
        .map(|k| {
            let t = k as i64 + 2;
            let coords: Vec<i64> = (0..=d).map(|i| if i == d { 0 } else { t.pow(i as u32) + i as i64 }).collect();
            ProjectivePoint::from_i64s(field, &coords).unwrap()
        })
        .collect();
    Configuration::from_points(pts).unwrap()
}

fn degenerate_control(field: FieldSpec) -> Result<String, String> {
    for d in [2, 3] {
        let config = coplanar(d, field);
        let member = wdn_membership(&config).map_err(|e| e.to_string())?;
        ensure(member.member, || format!("d={d}: coplanar configuration not in W"))?;
        ensure(!lies_on_rnc(&config).map_err(|e| e.to_string())?, || format!("d={d}: coplanar accepted"))?;
    }
    Ok("coplanar: in W, rejected by general position".into())
}

fn criterion_8() -> Outcome {
    Ok([negative_controls(2, Q)?, negative_controls(3, Q)?, degenerate_control(Q)?].join("; "))
}

fn criterion_9() -> Outcome {
    let p = 101;
    let fp = f101();
    let mut notes = Vec::new();
    for d in [2, 3] {
        notes.push(check_all_verify(d, fp, Duration::from_secs(1))?);
        notes.push(negative_controls(d, fp)?);
    }
    notes.push(degenerate_control(fp)?);

    // rational runs reduced mod p against runs over F_p
    let opts = SampleOptions { height: 20, integral: true };
    let mut compared = 0;
    for d in [2, 3] {
        for seed in 0..INSTANCES {
            let rational = sample_instance_with(d, Q, seed, &opts).map_err(|e| e.to_string())?;
            let modular = rational.reduce_mod(p).map_err(|e| format!("d={d} seed {seed}: {e}"))?;
            let reduced: Vec<ProjectivePoint> = rational
                .vertices()
                .points()
                .iter()
                .map(|x| x.reduce_mod(p).ok_or(format!("d={d} seed {seed}: vertex vanishes mod p")))
                .collect::<Result<_, _>>()?;
            ensure(reduced == modular.vertices().points(), || format!("d={d} seed {seed}: vertices disagree"))?;
            ensure(verify_instance(&rational, false).verdict == verify_instance(&modular, false).verdict, || {
                format!("d={d} seed {seed}: verdicts disagree")
            })?;

            // a perturbed configuration: every equation value reduces correctly
            let moved = perturb_vertex(&rational, seed as usize % (2 * d + 2), seed, 20).map_err(|e| e.to_string())?;
            let moved_fp = Configuration::from_points(
                moved.vertices().points().iter().map(|x| x.reduce_mod(p).unwrap()).collect(),
            )
            .map_err(|e| e.to_string())?;
            for idx in enumerate_psi_indices(d, 2 * d + 2).map_err(|e| e.to_string())? {
                let exact = psi_eval(moved.vertices(), &idx).map_err(|e| e.to_string())?.value;
                let modular = psi_eval(&moved_fp, &idx).map_err(|e| e.to_string())?.value;
                ensure(exact.reduce_mod(p) == Some(modular), || format!("d={d} seed {seed} {idx}: values disagree"))?;
            }
            compared += 1;
        }
    }
    notes.push(format!("{compared} integral instances agree after reduction"));
    Ok(notes.join("; "))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = 0;
    for (n, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(note) => println!("criterion {n}: PASS ({took:.2?}) {note}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL ({took:.2?}) {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
