//! Setwise stabilizers by backtrack, including one in a group of order
//! 244823040 that could never be enumerated.

use symbreak::catalog::build_named;
use symbreak::groupspec::parse_point_set;
use symbreak::sums::parallel_multiple;

fn main() -> symbreak::Result<()> {
    let m11 = build_named("M11@11")?;
    let double = parallel_multiple(&m11, 2);
    // primed points i' are encoded as 11 + i
    let set = parse_point_set("{1,2,3,1',5',7'}", Some(11), double.degree())?;
    let shown: Vec<usize> = set.iter().map(|x| x + 1).collect();
    println!("M11^(2), S = {shown:?}: stabilizer order {}", double.setwise_stabilizer(&set).order());

    let m24 = build_named("M24")?;
    let s: Vec<usize> = (0..8).collect();
    println!("M24 stabilizer of {{1..8}} has order {}", m24.setwise_stabilizer(&s).order());
    Ok(())
}
