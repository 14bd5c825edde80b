//! The bracket equations of W_{d,n}: listing them and evaluating them on
//! points of a twisted cubic, then on a perturbed configuration.
use vonstaudt::rnc::{veronese_embed, ParamPoint};
use vonstaudt::wdn::{enumerate_psi_indices, lies_on_rnc, psi_eval, wdn_membership};
use vonstaudt::{Configuration, FieldSpec, ProjectivePoint};

fn main() -> vonstaudt::Result<()> {
    let q = FieldSpec::Rationals;
    let indices = enumerate_psi_indices(3, 8)?;
    println!("{} equations for 8 points in P^3", indices.len());
    println!("first: {}", indices[0]);

    let pts = [-2, -1, 0, 1, 3, 4, 6, 10]
        .iter()
        .map(|&t| veronese_embed(&ParamPoint::from_i64s(q, t, 1)?, 3))
        .collect::<Result<Vec<_>, _>>()?;
    let cubic = Configuration::from_points(pts)?;
    let r = psi_eval(&cubic, &indices[0])?;
    println!("m1 = {}  m2 = {}", r.m1, r.m2);
    println!("on the cubic: member {}  on a curve {}", wdn_membership(&cubic)?.member, lies_on_rnc(&cubic)?);

    let moved = cubic.with_point(3, ProjectivePoint::from_i64s(q, &[2, 1, -1, 3])?)?;
    let m = wdn_membership(&moved)?;
    println!("one point moved: {} of {} equations fail", m.failures().count(), m.reports.len());
    println!("{}", serde_json::to_string(m.failures().next().unwrap())?);
    Ok(())
}
