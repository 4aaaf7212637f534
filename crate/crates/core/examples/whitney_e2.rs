//! E² of the Whitney complex, in both face conventions.
use confspace::arrangement::configuration_arrangement;
use confspace::whitney::{whitney_e2, FaceRange};

fn main() -> confspace::Result<()> {
    let lat = configuration_arrangement(4, 2)?;
    for faces in [FaceRange::AllButTop, FaceRange::Interior] {
        let w = whitney_e2(&lat, 2, faces)?;
        println!("{faces:?}: agrees with intervals = {}, d^2 = 0: {}", w.agrees, w.boundary_squares_to_zero);
        for e in &w.e2 {
            println!("  E2[{}, {}] = {}", e.r, e.s, e.rank);
        }
    }
    Ok(())
}
