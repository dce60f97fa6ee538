//! Direct sums, parallel sums through an isomorphism, and parallel multiples.

use symbreak::group::alternating;
use symbreak::sums::{direct_sum, parallel_multiple, parallel_sum, IsoSpec};
use symbreak::{PermGroup, Permutation};

fn main() -> symbreak::Result<()> {
    let h = PermGroup::from_cycles(7, &["(1,4)(6,7)", "(1,3,2)(4,7,5)"])?;
    let relabel = Permutation::parse_cycles("(1,7)(2,5,3)", 7)?;
    let k = h.conjugate_by(&relabel);
    let pairs = h.generators().iter().map(|g| (g.clone(), g.conjugate_by(&relabel))).collect();
    let iso = IsoSpec::new(h.clone(), k.clone(), pairs)?;
    println!("isomorphism valid: {}", iso.validate());

    let sum = parallel_sum(&iso)?;
    println!("H || K: degree {}, order {}", sum.degree(), sum.order());
    println!("H + K: order {}", direct_sum(&h, &k).order());

    let a5x3 = parallel_multiple(&alternating(5), 3);
    println!("A5^(3): degree {}, order {}", a5x3.degree(), a5x3.order());

    // a pairing that is not an isomorphism is refused
    let swapped = vec![(h.generators()[0].clone(), k.generators()[1].clone())];
    let bad = IsoSpec::new(h, k, swapped)?;
    println!("bad pairing rejected: {}", parallel_sum(&bad).is_err());
    Ok(())
}
