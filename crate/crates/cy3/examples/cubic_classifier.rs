//! Classify plane cubic divisors and compute exact j-invariants.
//!
//! Run with: `cargo run --example cubic_classifier`

use cy3::corpus::singular_normal_forms;
use cy3::cubiccurve::{classify_cubic, hesse_cubic, j_invariant};
use cy3::rat::{format_rat, int, rat};

fn main() -> cy3::Result<()> {
    println!("singular normal forms:");
    for (name, f, _, _) in singular_normal_forms() {
        println!("  {name:24} -> {}", classify_cubic(&f)?.name());
    }

    println!("\nthe diagonal pencil x^3 + y^3 + z^3 + 3t*xyz:");
    for t in [int(0), int(1), int(2), rat(5, 7), int(-1)] {
        let f = hesse_cubic(&t);
        let class = classify_cubic(&f)?;
        match j_invariant(&f) {
            Ok(j) => println!("  t = {:4}: {:22} j = {}", format_rat(&t), class.name(), format_rat(&j)),
            Err(_) => println!("  t = {:4}: {}", format_rat(&t), class.name()),
        }
    }
    Ok(())
}
