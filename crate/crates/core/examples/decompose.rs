//! Splitting an intransitive group into constituents and kernels, then
//! rebuilding it as a subdirect sum.

use symbreak::sums::{decompose, subdirect_sum};
use symbreak::PermGroup;

fn main() -> symbreak::Result<()> {
    // S3 on {1,2,3} glued to C2 on {4,5} through the sign map
    let g = PermGroup::from_cycles(5, &["(1,2,3)", "(1,2)(4,5)"])?;
    let d = decompose(&g, &[0, 1, 2], &[3, 4])?;
    println!("constituents: orders {} and {}", d.constituents.0.order(), d.constituents.1.order());
    println!("kernels: orders {} and {}", d.kernels.0.order(), d.kernels.1.order());
    println!("parallel sum: {}", d.is_parallel());

    let rebuilt = subdirect_sum(&d.subdirect_spec())?;
    println!("rebuilt order {} (original {})", rebuilt.order(), g.order());
    println!("same group: {}", d.reconstruct()?.same_group(&g));
    Ok(())
}
