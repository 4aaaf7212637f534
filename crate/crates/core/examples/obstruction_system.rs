//! Parse and solve an obstruction system over Z, then check the verdict table.
use confspace::linalg::Solution;
use confspace::obstruction::{builtin_system, integer_solvable, parse_bracket_system, zn_map_exists, LabelMode};

fn main() -> confspace::Result<()> {
    let sys = builtin_system("n4")?;
    let v = integer_solvable(&sys)?;
    if let Solution::Solvable { x } = &v.solution {
        let x: Vec<String> = x.iter().map(ToString::to_string).collect();
        println!("n = 4: {} equations, {} unknowns, witness [{}]", v.equations, v.variables, x.join(", "));
    }
    let toy = parse_bracket_system("2 x_[12|3] - 4 x_[13|2] = 1\n", LabelMode::Canonical)?;
    println!("toy system: {}", serde_json::to_string(&integer_solvable(&toy)?.solution)?);
    for n in 2..=12 {
        println!("n = {n}: map exists {}", zn_map_exists(n)?.exists);
    }
    Ok(())
}
