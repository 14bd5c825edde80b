//! Command-line front end. Structured output is JSON on stdout (one object,
//! or one object per line for multi-record commands); summaries go to
//! stderr. Exit codes: 0 success, 1 a check came out false, 2 bad usage or
//! input.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::projective::{is_general_linear_position, Configuration};
use crate::rnc::{curve_contains, fit_rnc, veronese_embed, RncModel};
use crate::scalar::FieldSpec;
use crate::symbolic::{splits_for, verify_factorization, verify_psi_identity_with, FactorizationCache, PsiStrategy, SubsetSplit};
use crate::vonstaudt::{
    dual_configuration, sample_distinct_params, sample_instance_with, verify_instance_with, SampleOptions, VerifyOptions,
    VonStaudtInstance, DEFAULT_HEIGHT,
};
use crate::wdn::{
    enumerate_psi_indices, evaluate_with_table, lies_on_rnc_with, sample_psi_indices, selected_indices, BracketTable,
    WdnOptions,
};

#[derive(Parser, Debug)]
#[command(name = "vonstaudt", version, about = "Exact checks for rational normal curves and osculating simplices")]
struct Cli {
    /// Worker threads (default: available parallelism). Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the JSON output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SampleArgs {
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "rationals")]
    field: FieldSpec,
    #[arg(long, default_value_t = DEFAULT_HEIGHT)]
    height: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sample 2d+2 parameters and print the instance.
    GenInstance {
        #[command(flatten)]
        sample: SampleArgs,
        /// Use integer parameters only.
        #[arg(long)]
        integral: bool,
    },
    /// Certify an instance; exit 1 when the verdict is false.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        castelnuovo: bool,
        /// Check only this many equations, chosen with --seed.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate the equations on a configuration (or on n points of the
    /// standard curve); one report per line.
    CheckPsi {
        #[arg(long, conflicts_with_all = ["d", "n"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "n")]
        d: Option<usize>,
        #[arg(long, requires = "d")]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "rationals")]
        field: FieldSpec,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: u64,
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Fit the curve through the first d+3 points and locate the others.
    FitCurve {
        #[arg(long)]
        input: PathBuf,
    },
    /// Check the bracket factorization of the simplex vertices for every
    /// (or a sample of) (d+1)-subset.
    SymFactorization {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check every (or a sample of) equation as a polynomial identity.
    SymPsi {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check that the osculating hyperplanes, as dual points, lie on a
    /// rational normal curve.
    DualCheck {
        #[arg(long, conflicts_with = "d")]
        input: Option<PathBuf>,
        #[command(flatten)]
        sample: SampleArgs,
    },
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let jobs = cli.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        let _ = writeln!(stderr, "error: --jobs must be at least 1");
        return 2;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let (mut out, mut notes) = (Vec::new(), Vec::new());
    let result = pool.install(|| dispatch(&cli.command, jobs > 1, &mut out, &mut notes));
    let _ = stderr.write_all(&notes);
    let code = match result {
        Ok(ok) => i32::from(!ok),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &out).map_err(|e| e.to_string()),
        None => stdout.write_all(&out).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    code
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Error::Invalid(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn emit(out: &mut Vec<u8>, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.push(b'\n');
    Ok(())
}

fn note(stderr: &mut Vec<u8>, msg: std::fmt::Arguments) {
    let _ = writeln!(stderr, "{msg}");
}

fn load_instance(path: &PathBuf) -> Result<VonStaudtInstance> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

fn load_configuration(path: &PathBuf) -> Result<Configuration> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

fn sampled_instance(s: &SampleArgs, integral: bool) -> Result<VonStaudtInstance> {
    let d = s.d.ok_or_else(|| Error::Invalid("--d is required".into()))?;
    sample_instance_with(d, s.field, s.seed, &SampleOptions { height: s.height, integral })
}

/// Returns whether every check passed.
fn dispatch(cmd: &Command, parallel: bool, out: &mut Vec<u8>, stderr: &mut Vec<u8>) -> Result<bool> {
    match cmd {
        Command::GenInstance { sample, integral } => {
            let inst = sampled_instance(sample, *integral)?;
            emit(out, &inst)?;
            note(stderr, format_args!("instance d={} field={} seed={}", inst.d(), inst.field(), sample.seed));
            Ok(true)
        }
        Command::Verify { input, castelnuovo, sample, seed } => {
            let inst = load_instance(input)?;
            let opts = VerifyOptions {
                castelnuovo: *castelnuovo,
                wdn: WdnOptions { sample: sample.map(|k| (k, *seed)), parallel },
            };
            let cert = verify_instance_with(&inst, &opts);
            emit(out, &cert)?;
            note(
                stderr,
                format_args!(
                    "glp={} psi {}/{} zero{} verdict={}",
                    cert.glp_ok,
                    cert.psi_zero,
                    cert.psi_total,
                    cert.castelnuovo_ok.map(|c| format!(" castelnuovo={c}")).unwrap_or_default(),
                    cert.verdict
                ),
            );
            Ok(cert.verdict)
        }
        Command::CheckPsi { input, d, n, seed, field, height, sample } => {
            let config = match (input, d, n) {
                (Some(path), _, _) => load_configuration(path)?,
                (None, Some(d), Some(n)) => curve_sample(*d, *n, *field, *seed, *height)?,
                _ => return Err(Error::Invalid("give --input or both --d and --n".into())),
            };
            let opts = WdnOptions { sample: sample.map(|k| (k, *seed)), parallel };
            let indices = selected_indices(config.dim(), config.len(), &opts)?;
            let table = BracketTable::for_indices(&config, &indices, parallel);
            let m = evaluate_with_table(&config, &table, &indices, parallel)?;
            for r in &m.reports {
                emit(out, r)?;
            }
            let zero = m.reports.iter().filter(|r| r.is_zero()).count();
            note(stderr, format_args!("{zero}/{} equations vanish", m.reports.len()));
            Ok(m.member)
        }
        Command::FitCurve { input } => {
            let config = load_configuration(input)?;
            fit_curve(&config, out, stderr)
        }
        Command::SymFactorization { d, sample, seed } => {
            let mut splits = SubsetSplit::all(*d);
            if let Some(k) = sample {
                splits = pick(splits, *k, *seed);
            }
            let check = |s: &SubsetSplit| verify_factorization(s);
            let oks: Vec<bool> =
                if parallel { splits.par_iter().map(check).collect() } else { splits.iter().map(check).collect() };
            #[derive(Serialize)]
            struct Rec<'a> {
                kind: &'static str,
                d: usize,
                #[serde(rename = "K")]
                k: &'a [usize],
                ok: bool,
            }
            for (s, &ok) in splits.iter().zip(&oks) {
                emit(out, &Rec { kind: "factorization", d: *d, k: s.k(), ok })?;
            }
            let good = oks.iter().filter(|&&b| b).count();
            note(stderr, format_args!("{good}/{} factorizations verified", oks.len()));
            Ok(good == oks.len())
        }
        Command::SymPsi { d, sample, seed } => {
            let n = 2 * d + 2;
            let indices = match sample {
                Some(k) => sample_psi_indices(*d, n, *k, *seed)?,
                None => enumerate_psi_indices(*d, n)?,
            };
            let mut cache = FactorizationCache::new();
            cache.prefill(&splits_for(&indices), parallel);
            let mut good = 0;
            #[derive(Serialize)]
            struct Rec<'a> {
                kind: &'static str,
                d: usize,
                #[serde(rename = "J")]
                j: &'a [usize],
                #[serde(rename = "I")]
                i: &'a [usize],
                ok: bool,
            }
            for idx in &indices {
                let mut ok = verify_psi_identity_with(*d, idx, PsiStrategy::FactorMultiset, &mut cache)?;
                if *d == 2 {
                    ok &= verify_psi_identity_with(*d, idx, PsiStrategy::FullExpansion, &mut cache)?;
                }
                good += usize::from(ok);
                emit(out, &Rec { kind: "psi", d: *d, j: idx.j(), i: idx.i(), ok })?;
            }
            note(stderr, format_args!("{good}/{} identities verified", indices.len()));
            Ok(good == indices.len())
        }
        Command::DualCheck { input, sample } => {
            let inst = match input {
                Some(path) => load_instance(path)?,
                None => sampled_instance(sample, false)?,
            };
            let dual = dual_configuration(&inst);
            let glp_ok = is_general_linear_position(&dual);
            let on_curve = lies_on_rnc_with(&dual, &WdnOptions { sample: None, parallel })?;
            #[derive(Serialize)]
            struct Rec {
                kind: &'static str,
                d: usize,
                field: FieldSpec,
                glp_ok: bool,
                lies_on_rnc: bool,
            }
            emit(out, &Rec { kind: "dual", d: inst.d(), field: inst.field(), glp_ok, lies_on_rnc: on_curve })?;
            note(stderr, format_args!("dual points glp={glp_ok} on a rational normal curve={on_curve}"));
            Ok(glp_ok && on_curve)
        }
    }
}

/// `k` of `items`, seeded, kept in their original order.
fn pick<T: Clone>(items: Vec<T>, k: usize, seed: u64) -> Vec<T> {
    if k >= items.len() {
        return items;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx = rand::seq::index::sample(&mut rng, items.len(), k).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|i| items[i].clone()).collect()
}

/// `n` points of the standard curve at seeded distinct parameters.
fn curve_sample(d: usize, n: usize, field: FieldSpec, seed: u64, height: u64) -> Result<Configuration> {
    let params = sample_distinct_params(n, field, seed, &SampleOptions { height, integral: false })?;
    let pts = params.iter().map(|t| veronese_embed(t, d)).collect::<Result<Vec<_>>>()?;
    Configuration::new(field, d, pts)
}

fn fit_curve(config: &Configuration, out: &mut Vec<u8>, stderr: &mut Vec<u8>) -> Result<bool> {
    let d = config.dim();
    if config.len() < d + 3 {
        return Err(Error::PointCount { expected: format!(">= {}", d + 3), found: config.len() });
    }
    let head = Configuration::new(config.field(), d, config.points()[..d + 3].to_vec())?;
    let model = fit_rnc(&head)?;
    let params = config
        .points()
        .iter()
        .map(|p| curve_contains(&model, p))
        .collect::<Result<Vec<_>>>()?;
    #[derive(Serialize)]
    struct Rec<'a> {
        model: &'a RncModel,
        parameters: Vec<Option<crate::rnc::ParamPoint>>,
    }
    let all_on = params.iter().all(Option::is_some);
    let on = params.iter().filter(|p| p.is_some()).count();
    emit(out, &Rec { model: &model, parameters: params })?;
    note(stderr, format_args!("{on}/{} points on the fitted curve", config.len()));
    Ok(all_on)
}
