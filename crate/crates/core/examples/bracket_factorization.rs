//! Brackets of simplex vertices factor into 2x2 brackets of the parameters.
//! Prints the eight factorizations used by one equation for d = 3 and
//! checks every (d+1)-subset by full expansion.
use std::time::Instant;

use vonstaudt::symbolic::{factorization, sym_bracket_R, verify_factorization, SubsetSplit};

fn main() -> vonstaudt::Result<()> {
    let d = 3;
    for k in [[4, 5, 6, 7], [2, 3, 6, 7], [1, 3, 5, 7], [1, 2, 4, 7], [3, 5, 6, 7], [2, 4, 6, 7], [1, 4, 5, 7], [1, 2, 3, 7]] {
        let split = SubsetSplit::new(d, k.to_vec())?;
        let expanded = sym_bracket_R(&split);
        println!("|R{}| = {}  ({} terms expanded)", k.map(|x| x.to_string()).join(" R"), factorization(&split).label(), expanded.num_terms());
    }

    for d in [2, 3] {
        let start = Instant::now();
        let all = SubsetSplit::all(d);
        let ok = all.iter().filter(|s| verify_factorization(s)).count();
        println!("d={d}: {ok}/{} subsets verified in {:.2?}", all.len(), start.elapsed());
    }

    let small = sym_bracket_R(&SubsetSplit::new(2, vec![1, 2, 3])?);
    println!("|R1 R2 R3| for d=2 = {small}");
    Ok(())
}
