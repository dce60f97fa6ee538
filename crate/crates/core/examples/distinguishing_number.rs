//! Distinguishing numbers by search, against the closed formula for
//! parallel multiples of alternating groups.

use symbreak::catalog::{build_named, predict_d};
use symbreak::group::alternating;
use symbreak::sums::parallel_multiple;
use symbreak::symmetry::{an_parallel_formula, distinguishing_number, Distinguishing};

fn main() -> symbreak::Result<()> {
    for n in [5usize, 6] {
        for k in 1..=3 {
            let g = parallel_multiple(&alternating(n), k);
            let d = distinguishing_number(&g, n as u32, 5_000_000);
            println!("A{n}^({k}): search {:?}, formula {}", d.value(), an_parallel_formula(n as u64, k as u32));
        }
    }

    let m11 = build_named("M11")?;
    if let Distinguishing::Exact { value, witness } = distinguishing_number(&m11, 5, 5_000_000) {
        println!("D(M11) = {value}, labels {:?}", witness.labels());
    }
    let p = predict_d(&build_named("A6||psiA6")?)?;
    println!("classifier on A6||psiA6: {} via {:?}", p.value, p.rule);
    Ok(())
}
