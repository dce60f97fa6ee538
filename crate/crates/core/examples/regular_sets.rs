//! Regular sets: subsets whose setwise stabilizer is trivial.

use symbreak::catalog::{build_named, catalog};
use symbreak::sums::parallel_multiple;
use symbreak::symmetry::{find_regular_set, regular_set_report, SearchMode, SearchOutcome};

fn main() -> symbreak::Result<()> {
    let l27 = build_named("L2(7)@8")?;
    let out = find_regular_set(&l27, 0..=8, SearchMode::Exhaustive, 1_000_000);
    println!("L2(7) on 8 points: {:?}", matches!(out, SearchOutcome::NoneExists).then_some("no regular set"));

    let sum = build_named("L3(2)||psiL3(2)")?;
    for size in [3, 4, 10, 11] {
        match find_regular_set(&sum, size..=size, SearchMode::Exhaustive, 1_000_000) {
            SearchOutcome::Found(r) => println!("size {size}: {:?}", r.set.iter().map(|x| x + 1).collect::<Vec<_>>()),
            other => println!("size {size}: {other:?}"),
        }
    }

    // M24 itself has no regular set, but its parallel double does
    let entry = catalog().lookup("M24").expect("catalogued");
    let m24x2 = parallel_multiple(&entry.group()?, 2);
    let set = entry.claimed_regular_set()?.expect("printed set");
    let report = regular_set_report(&m24x2, &set);
    println!("M24^(2), printed set of size {}: regular {}", set.len(), report.is_regular());
    Ok(())
}
