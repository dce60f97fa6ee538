//! Browsing the built-in catalog and identifying groups.

use symbreak::catalog::{catalog, identify, Sweep};

fn main() -> symbreak::Result<()> {
    let c = catalog();
    for sweep in [Sweep::Doubled, Sweep::Twisted, Sweep::Mixed, Sweep::AlternatingTwist] {
        let ids: Vec<&str> = c.entries_in(sweep).map(|e| e.id.as_str()).collect();
        println!("{}: {}", sweep.label(), ids.join(", "));
    }
    let e = c.lookup("M 12").expect("alias lookup ignores spacing");
    let g = e.group()?;
    println!("{} has order {} and identifies as {:?}", e.id, g.order(), identify(&g));
    for ex in c.exceptions().iter().take(3) {
        println!("exception {}: D = {}", ex.group, ex.d);
    }
    Ok(())
}
