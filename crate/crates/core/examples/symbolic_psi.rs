//! Every equation of W_{d,2d+2} vanishes identically on the symbolic simplex
//! vertices. Also shows the parity and sign bookkeeping behind it.
use vonstaudt::symbolic::{
    factored_monomials, h_sign, psi_full_expansion, sign_case_holds, step_two_parities, verify_psi_identity,
    FactorizationCache,
};
use vonstaudt::wdn::{enumerate_psi_indices, PsiIndex};

fn main() -> vonstaudt::Result<()> {
    let conic = &enumerate_psi_indices(2, 6)?[0];
    println!("d=2 {conic}: expanded to {}", psi_full_expansion(2, conic)?);

    let idx = PsiIndex::new(3, 8, (1..=7).collect(), (1..=6).collect())?;
    let mut cache = FactorizationCache::new();
    let [m1, m2] = factored_monomials(3, &idx, &mut cache)?.expect("factorizations verify");
    println!("{idx}");
    println!("  sign {} vs {}, {} factors each, equal multisets {}", m1.sign, m2.sign, m1.factors.values().sum::<usize>(), m1.factors == m2.factors);
    println!("  parity sums {:?}", step_two_parities(&idx));
    let signs: Vec<i8> = [[4, 5, 6], [2, 3, 6], [1, 3, 5], [1, 2, 4], [3, 5, 6], [2, 4, 6], [1, 4, 5], [1, 2, 3]]
        .iter()
        .map(|t| h_sign(&idx, t))
        .collect();
    println!("  s(H) {signs:?}");

    for d in [2, 3] {
        let all = enumerate_psi_indices(d, 2 * d + 2)?;
        let ok = all.iter().map(|i| verify_psi_identity(d, i)).collect::<Result<Vec<_>, _>>()?;
        let cases = all.iter().filter(|i| sign_case_holds(i)).count();
        println!("d={d}: {}/{} identities, sign cases {cases}/{}", ok.iter().filter(|&&b| b).count(), all.len(), all.len());
    }
    Ok(())
}
