//! Build Π_n, count it, and evaluate the Möbius function.
use confspace::{build_partition_lattice, Partition};

fn main() -> confspace::Result<()> {
    for n in 1..=6 {
        let lat = build_partition_lattice(n)?;
        let mu = lat.mobius(&Partition::finest(n), &Partition::coarsest(n))?;
        println!("Pi_{n}: {:>4} elements, mu(0, 1) = {mu}", lat.len());
    }
    let lat = build_partition_lattice(4)?;
    let x = lat.index_of(&Partition::new(4, vec![vec![1, 2], vec![3], vec![4]])?).unwrap();
    let y = lat.index_of(&Partition::new(4, vec![vec![1], vec![2], vec![3, 4]])?).unwrap();
    println!("{} v {} = {}", lat.element(x), lat.element(y), lat.element(lat.join(x, y)));
    Ok(())
}
