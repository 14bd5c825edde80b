//! The standard rational normal curve, its osculating hyperplanes and the
//! vertex where d of them meet.
use vonstaudt::rnc::{osculating_hyperplane, simplex_vertex, veronese_embed, ParamPoint};
use vonstaudt::FieldSpec;

fn main() -> vonstaudt::Result<()> {
    let q = FieldSpec::Rationals;
    let d = 3;
    let params: Vec<ParamPoint> = [0, 1, 2, 5].iter().map(|&t| ParamPoint::from_i64s(q, t, 1)).collect::<Result<_, _>>()?;

    for t in &params {
        println!("t={t}  point {}  plane {}", veronese_embed(t, d)?, osculating_hyperplane(t, d)?);
    }

    let r = simplex_vertex(&params[..d])?;
    println!("vertex of the planes at {}, {}, {}: {r}", params[0], params[1], params[2]);
    for t in &params {
        let h = osculating_hyperplane(t, d)?;
        println!("  on plane at {t}: {}", h.contains(&r)?);
    }

    // the plane at t0 meets the curve only at t0
    let h = osculating_hyperplane(&params[1], d)?;
    for t in -2..=3 {
        let p = veronese_embed(&ParamPoint::from_i64s(q, t, 1)?, d)?;
        println!("  H(t={t}) = {}", h.evaluate(p.coords())?);
    }
    Ok(())
}
