//! The cyclic shift acting on top homology of Δ(Π̄_p) over F_p.
use confspace::build_partition_lattice;
use confspace::representation::partition_lattice_module;

fn main() -> confspace::Result<()> {
    for p in [3u64, 5] {
        let lat = build_partition_lattice(p as usize)?;
        let r = partition_lattice_module(p, &lat)?;
        println!(
            "p = {p}: dim {}, Jordan blocks {:?}, (free, K, trivial) = {:?}",
            r.dimension,
            r.jordan_type.sizes,
            r.descriptor.triple()
        );
    }
    Ok(())
}
