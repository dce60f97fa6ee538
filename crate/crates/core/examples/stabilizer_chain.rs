//! Orders, membership and base data from a stabilizer chain.

use symbreak::catalog::build_named;
use symbreak::{PermGroup, Permutation};

fn main() -> symbreak::Result<()> {
    let m12 = build_named("M12")?;
    let chain = m12.chain();
    println!("M12 order {}", m12.order());
    println!("base {:?}", chain.base().iter().map(|b| b + 1).collect::<Vec<_>>());
    println!("transversal sizes {:?}", chain.transversal_sizes());

    let l32 = PermGroup::from_cycles(7, &["(1,4)(6,7)", "(1,3,2)(4,7,5)"])?;
    let odd = Permutation::parse_cycles("(1,2)", 7)?;
    println!("L3(2) order {}, primitive {}", l32.order(), l32.is_primitive()?);
    println!("(1,2) in L3(2)? {}", l32.contains(&odd)?);
    println!("point stabilizer of 1 has order {}", l32.pointwise_stabilizer(&[0]).order());
    Ok(())
}
