//! The index of F(R^d, p) and the certificate that rules out an equivariant map.
use confspace::cohomology::{fh_index_bounds, fh_index_prime};

fn main() -> confspace::Result<()> {
    for p in [2u64, 3, 5] {
        let r = fh_index_prime(p, 3)?;
        println!(
            "p = {p}: {} of degree {} lies outside the index, no map: {}",
            r.certificate.element, r.certificate.degree, r.no_equivariant_map
        );
    }
    let b = fh_index_bounds(2, 2, 3, true)?;
    println!("(Z/2)^2, d = 3: N = {}, scan gives {:?}", b.n, b.scanned_n);
    Ok(())
}
