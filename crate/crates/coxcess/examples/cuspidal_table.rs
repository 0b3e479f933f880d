//! The cuspidal-class table of an irreducible type: size, minimal length,
//! |X_min| and |X⁰_min| per class. Pass a type name as the first argument
//! (default F4); compare with the bundled expected data where present.
//!
//!     cargo run --example cuspidal_table
//!     cargo run --example cuspidal_table -- H3

use coxcess::conjugacy::Budget;
use coxcess::report::{bundled_expected, compare_report, cuspidal_report, report_to_text};
use coxcess::{CoxeterSystem, CoxeterType, ReportOptions};

fn main() -> coxcess::Result<()> {
    let type_name = std::env::args().nth(1).unwrap_or_else(|| "F4".to_string());
    let t = CoxeterType::parse(&type_name)?;
    let doc = cuspidal_report(&t, &ReportOptions::default())?;
    print!("{}", report_to_text(&doc));

    if let Some(expected) = bundled_expected(&t.to_string()) {
        let sys = CoxeterSystem::build(&t)?;
        let diff = compare_report(&sys, &doc, &expected, &Budget::default(), false);
        if diff.is_match() {
            println!("\nmatches the bundled expected table");
        } else {
            println!("\nMISMATCH against the bundled expected table:");
            for m in &diff.mismatches {
                println!("  {m}");
            }
        }
    }
    Ok(())
}
