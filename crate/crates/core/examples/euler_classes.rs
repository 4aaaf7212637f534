//! ζ, ζ_H and restriction to subgroups.
use confspace::cohomology::{euler_class_zeta, euler_class_zeta_h, poly_divides, proper_subgroups, restrict};

fn main() -> confspace::Result<()> {
    let zeta = euler_class_zeta(2, 3)?;
    println!("zeta(2, 3) = {zeta}");
    for h in proper_subgroups(2, 3) {
        let zh = euler_class_zeta_h(2, 3, &h)?;
        let q = poly_divides(&zh.poly_part(), &zeta.poly_part())?.expect("zeta_H divides zeta");
        println!("H = {h:?}: zeta_H = {zh}, quotient {q}, zeta|H = {}", restrict(&zeta, &h)?);
    }
    Ok(())
}
