//! Group specs as JSON: plain generators, primed points, and sum expressions.

use symbreak::groupspec::parse_group_spec;

fn main() -> symbreak::Result<()> {
    let docs = [
        r#"{"degree": 5, "generators": ["(1,2,3,4,5)", "(1,2,3)"]}"#,
        r#"{"degree": 14, "prime_offset": 7, "generators": ["(1,4)(6,7)(1',4')(6',7')"]}"#,
        r#"{"name": "M11"}"#,
        r#"{"sum": {"kind": "multiple", "components": ["A5"], "r": 3}}"#,
        r#"{"sum": {"kind": "direct", "components": ["A4", {"degree": 2, "generators": ["(1,2)"]}]}}"#,
    ];
    for doc in docs {
        let g = parse_group_spec(doc)?;
        println!("degree {:>2}, order {:>6}  <- {doc}", g.degree(), g.order());
    }
    println!("unknown fields rejected: {}", parse_group_spec(r#"{"gens": []}"#).is_err());
    Ok(())
}
