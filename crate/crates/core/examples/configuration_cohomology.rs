//! Betti numbers of F(R^d, n) from interval homology, next to the closed form.
use confspace::arrangement::{config_rank_formula, configuration_arrangement, gm_cohomology, is_c_arrangement};
use confspace::Coefficients;

fn main() -> confspace::Result<()> {
    for d in [2usize, 3] {
        for n in 2..=5 {
            let lat = configuration_arrangement(n, d)?;
            assert!(is_c_arrangement(&lat, d));
            let gm = gm_cohomology(&lat, Coefficients::Integers)?;
            let closed = config_rank_formula(n, d)?;
            assert_eq!(gm.ranks(), closed.ranks());
            println!("d = {d}, n = {n}: {:?} (total {})", gm.ranks(), gm.total_rank());
        }
    }
    Ok(())
}
