//! Lowest degree carrying a partition fixed by the whole regular (Z/p)^k.
use confspace::arrangement::full_stabilizer_degree;

fn main() -> confspace::Result<()> {
    for (p, k) in [(2, 2), (2, 3), (3, 2)] {
        let s = full_stabilizer_degree(p, k, 2)?;
        println!("p = {p}, k = {k}: N = {} after {} orbits, e.g. {}", s.degree, s.orbits_scanned, s.representatives[0]);
    }
    Ok(())
}
