//! Reduced homology of Δ(Π̄_n) over Z and F_2.
use confspace::{build_partition_lattice, chain_complex, homology, order_complex, Coefficients, Region};

fn main() -> confspace::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let lat = build_partition_lattice(n)?;
    let sc = order_complex(&lat, Region::ProperPart)?;
    println!("f-vector {:?}", sc.f_vector());
    for coeff in [Coefficients::Integers, Coefficients::Prime(2)] {
        let cc = chain_complex(&sc, coeff);
        cc.verify()?;
        let h = homology(&cc);
        for d in h.support() {
            println!("over {coeff}: H~_{d} has rank {} torsion {:?}", h.betti(d), h.torsion(d));
        }
    }
    Ok(())
}
