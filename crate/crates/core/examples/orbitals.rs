//! Orbits on pairs of points.

use symbreak::catalog::build_named;
use symbreak::symmetry::orbitals;

fn main() -> symbreak::Result<()> {
    for name in ["A6", "A6^(2)", "A6||psiA6", "A5^(3)", "S5^(3)"] {
        let g = build_named(name)?;
        let unordered = orbitals(&g, false);
        let sizes: Vec<usize> = unordered.iter().map(Vec::len).collect();
        println!("{name:<10} {} unordered {sizes:?}, {} ordered", unordered.len(), orbitals(&g, true).len());
    }
    Ok(())
}
