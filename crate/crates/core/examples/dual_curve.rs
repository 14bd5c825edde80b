//! Osculating hyperplanes of a rational normal curve, read as points of the
//! dual space, again lie on a rational normal curve.
use vonstaudt::vonstaudt::{dual_configuration, sample_instance};
use vonstaudt::wdn::lies_on_rnc;
use vonstaudt::FieldSpec;

fn main() -> vonstaudt::Result<()> {
    for d in 2..=4 {
        let inst = sample_instance(d, FieldSpec::Rationals, 11)?;
        let dual = dual_configuration(&inst);
        println!("d={d}: first dual point {}, on a curve: {}", dual.points()[0], lies_on_rnc(&dual)?);
    }
    Ok(())
}
