//! The dual Stiefel-Whitney computation behind the k-regular embedding bound.
use confspace::cohomology::{chisholm_bound, dual_sw_expansion};

fn main() -> confspace::Result<()> {
    for l in 1..=3 {
        for m in 1..=3 {
            let e = dual_sw_expansion(l, m)?;
            let (d, k) = (1u64 << l, 1u64 << m);
            println!(
                "d = {d}, k = {k}: {} candidates, odd {:?}; no k-regular R^{d} -> R^{}",
                e.candidates.len(),
                e.survivors,
                chisholm_bound(d, k)?
            );
        }
    }
    Ok(())
}
