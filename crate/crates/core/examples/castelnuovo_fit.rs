//! The unique rational normal curve through d+3 points in general position.
use vonstaudt::rnc::{curve_contains, curve_point, fit_rnc, ParamPoint};
use vonstaudt::{Configuration, FieldSpec, ProjectivePoint};

fn main() -> vonstaudt::Result<()> {
    let q = FieldSpec::Rationals;
    let rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1], [1, 2, -3, 5]];
    let pts = rows.iter().map(|r| ProjectivePoint::from_i64s(q, r)).collect::<Result<Vec<_>, _>>()?;
    let config = Configuration::from_points(pts)?;

    let model = fit_rnc(&config)?;
    println!("{}", serde_json::to_string(&model)?);
    for p in config.points() {
        let t = curve_contains(&model, p)?.expect("fitted points lie on the curve");
        println!("{p} at parameter {t}");
    }

    let extra = curve_point(&model, &ParamPoint::affine(q.parse("7/3")?))?;
    println!("t=7/3 gives {extra}, found again at {}", curve_contains(&model, &extra)?.unwrap());
    let off = ProjectivePoint::from_i64s(q, &[1, 1, 1, 2])?;
    println!("{off} on the curve: {}", curve_contains(&model, &off)?.is_some());
    Ok(())
}
