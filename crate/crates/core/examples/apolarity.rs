//! Differential operators acting on binary forms. The operator attached to
//! a linear form kills its powers, and the pairing in equal degree is
//! perfect when the characteristic exceeds the degree.
use vonstaudt::linalg::Matrix;
use vonstaudt::rnc::{apolarity_apply, apolarity_pairing, BinaryForm, DiffOperator};
use vonstaudt::FieldSpec;

fn pairing_det(field: FieldSpec, d: usize) -> vonstaudt::Result<vonstaudt::Scalar> {
    let rows = (0..=d)
        .map(|i| {
            (0..=d)
                .map(|k| apolarity_pairing(&DiffOperator::monomial(field, d, i), &BinaryForm::monomial(field, d, k)))
                .collect()
        })
        .collect::<Result<Vec<Vec<_>>, _>>()?;
    Ok(Matrix::from_rows(rows)?.determinant())
}

fn main() -> vonstaudt::Result<()> {
    let q = FieldSpec::Rationals;
    let l = BinaryForm::linear(q.from_i64(1), q.from_i64(2))?;
    let dl = DiffOperator::annihilator(&l)?;
    let show = |c: &[vonstaudt::Scalar]| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    println!("L^3 = [{}]", show(l.pow(3).coeffs()));
    println!("d_L^3 = [{}]", show(dl.pow(3).coeffs()));
    println!("d_L^3 applied to L^3: {}", apolarity_pairing(&dl.pow(3), &l.pow(3))?);
    println!("d_L applied to L^3: [{}]", show(apolarity_apply(&dl, &l.pow(3))?.coeffs()));

    for d in [3, 6, 7] {
        let f7 = FieldSpec::prime(7)?;
        println!("pairing determinant d={d}: over Q {}, over F_7 {}", pairing_det(q, d)?, pairing_det(f7, d)?);
    }
    Ok(())
}
