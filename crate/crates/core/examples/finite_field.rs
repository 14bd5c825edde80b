//! The same construction over F_101, and agreement with the rational one
//! reduced mod 101.
use vonstaudt::vonstaudt::{sample_instance, sample_instance_with, verify_instance, SampleOptions};
use vonstaudt::FieldSpec;

fn main() -> vonstaudt::Result<()> {
    let f = FieldSpec::prime(101)?;
    for d in [2, 3] {
        let inst = sample_instance(d, f, 3)?;
        let cert = verify_instance(&inst, true);
        println!("F_101 d={d}: {} equations, verdict {}", cert.psi_total, cert.verdict);
    }

    let rational = sample_instance_with(3, FieldSpec::Rationals, 3, &SampleOptions { height: 20, integral: true })?;
    let reduced = rational.reduce_mod(101)?;
    for (r, s) in rational.vertices().points().iter().zip(reduced.vertices().points()) {
        println!("{r} -> {}  (direct {s})", r.reduce_mod(101).unwrap());
    }
    println!("reduced verdict {}", verify_instance(&reduced, false).verdict);

    // a prime too small to hold 2d+2 distinct points
    println!("F_5, d=2: {}", sample_instance(2, FieldSpec::prime(5)?, 0).unwrap_err());
    Ok(())
}
