//! Brackets, rank and general linear position of point configurations.
use vonstaudt::projective::{bracket, is_degenerate, is_general_linear_position, rank};
use vonstaudt::{Configuration, FieldSpec, ProjectivePoint};

fn main() -> vonstaudt::Result<()> {
    let q = FieldSpec::Rationals;
    let pts: Vec<ProjectivePoint> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 4]]
        .iter()
        .map(|c| ProjectivePoint::from_i64s(q, c))
        .collect::<Result<_, _>>()?;
    println!("|e0 e1 e2| = {}", bracket(&pts[..3])?);
    println!("|e0 [1:1:1] [1:2:4]| = {}", bracket([&pts[0], &pts[3], &pts[4]])?);

    let config = Configuration::from_points(pts.clone())?;
    println!("rank {}  general position {}", rank(&config), is_general_linear_position(&config));

    // put the last point on the line through e0 and e1
    let flat = config.with_point(4, ProjectivePoint::parse(q, &["3", "1/2", "0"])?)?;
    println!("after moving a point: general position {}", is_general_linear_position(&flat));

    let line = Configuration::from_points(
        (0..4).map(|t| ProjectivePoint::from_i64s(q, &[1, t, 0])).collect::<Result<_, _>>()?,
    )?;
    println!("four points on a line: degenerate {}", is_degenerate(&line)?);
    println!("{}", serde_json::to_string(&config)?);
    Ok(())
}
