//! Orbit-by-orbit cohomology of F(R^d, p^k) under the regular (Z/p)^k.
use confspace::arrangement::equivariant_gm;
use confspace::{build_partition_lattice, regular_embedding};

fn main() -> confspace::Result<()> {
    let (p, k, d) = (2usize, 2usize, 2usize);
    let group = regular_embedding(p, k)?;
    let lat = build_partition_lattice(group.degree())?;
    let report = equivariant_gm(&lat, d, &group, p as u64)?;
    for deg in &report.degrees {
        let fixed = deg.contributions.iter().filter(|c| c.full_stabilizer).count();
        println!("H^{}: rank {}, {} orbits, {fixed} fully stabilized", deg.degree, deg.rank, deg.contributions.len());
    }
    println!("first fully stabilized degree {:?}", report.first_full_stabilizer_degree());
    Ok(())
}
