//! Parsing, composing and printing permutations.
//!
//! Composition acts on the right: `a * b` applies `a` first.

use symbreak::Permutation;

fn main() -> symbreak::Result<()> {
    let a = Permutation::parse_cycles("(1,2,3)(4,5)", 6)?;
    let b = Permutation::parse_cycles("(1,6)", 6)?;
    println!("a         = {}", a.render_cycles());
    println!("b         = {}", b.render_cycles());
    println!("a * b     = {}", (&a * &b).render_cycles());
    println!("b * a     = {}", (&b * &a).render_cycles());
    println!("a^-1      = {}", a.inverse().render_cycles());
    println!("parity(a) = {:?}", a.parity());
    // 0-based in code, 1-based in text
    println!("image of point 1 under a: {}", a.image(0) + 1);
    Ok(())
}
