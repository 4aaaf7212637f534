//! Smith normal form with transforms, and integer solving with certificates.
use confspace::{smith_normal_form, solve_integer, Int, SparseIntMatrix};

fn main() -> confspace::Result<()> {
    let a = SparseIntMatrix::from_dense(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&a);
    println!("invariant factors {:?}", snf.diagonal.iter().map(ToString::to_string).collect::<Vec<_>>());
    let b: Vec<Int> = [2, 6, 0].into_iter().map(Int::from).collect();
    println!("{}", serde_json::to_string_pretty(&solve_integer(&a, &b)?)?);
    let b: Vec<Int> = [1, 0, 0].into_iter().map(Int::from).collect();
    let sol = solve_integer(&a, &b)?;
    println!("{}", serde_json::to_string_pretty(&sol)?);
    Ok(())
}
