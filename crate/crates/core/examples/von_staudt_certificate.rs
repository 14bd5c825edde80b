//! Sample two osculating simplices, certify that their vertices lie on a
//! rational normal curve, then break one vertex and certify again.
use vonstaudt::vonstaudt::{perturb_vertex, sample_instance, verify_instance};
use vonstaudt::FieldSpec;

fn main() -> vonstaudt::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for d in 2..=4 {
        let inst = sample_instance(d, FieldSpec::Rationals, seed)?;
        let params: Vec<String> = inst.params().iter().map(|t| t.to_string()).collect();
        println!("d={d} parameters {}", params.join(" "));
        for (i, r) in inst.vertices().points().iter().enumerate() {
            println!("  R{} = {r}  on planes {:?}", i + 1, inst.planes_through(i)?);
        }
        let cert = verify_instance(&inst, true);
        println!("  {}", serde_json::to_string(&cert)?);

        let broken = perturb_vertex(&inst, 0, seed, 20)?;
        let cert = verify_instance(&broken, false);
        println!("  R1 replaced by {}: verdict {}, {} of {} equations fail", broken.vertices().points()[0], cert.verdict, cert.psi_failures.len(), cert.psi_total);
    }
    Ok(())
}
