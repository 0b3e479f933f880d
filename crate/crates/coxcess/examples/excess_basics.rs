//! Lengths, reflection lengths and the excess statistics of single elements.
//!
//!     cargo run --example excess_basics

use coxcess::conjugacy::Budget;
use coxcess::report::format_word;
use coxcess::{excess_report_for, CoxeterSystem, CoxeterType};

fn main() -> coxcess::Result<()> {
    let sys = CoxeterSystem::build(&CoxeterType::parse("B3")?)?;
    let budget = Budget::default();

    println!("W(B3): order {}, {} positive roots\n", sys.group_order(), sys.n_positive_roots());

    // Walk a few elements: generators, a Coxeter element, the longest element.
    let coxeter = sys.element_of_word(&[0, 1, 2]);
    let elements = vec![
        ("r1", sys.generator(0)),
        ("r1 r2 r3 (Coxeter)", coxeter),
        ("w0", sys.longest_element()),
        ("r3 r2 r3", sys.element_of_word(&[2, 1, 2])),
    ];

    for (name, w) in &elements {
        let report = excess_report_for(&sys, w, &budget)?;
        println!(
            "{name:<20} l = {:>2}  L = {}  e = {}  E = {}",
            sys.length(w),
            sys.reflection_length(w),
            report.excess,
            report.reflection_excess,
        );
        println!(
            "{:<20} zero-defect witness: x = {:?}, y = {:?}",
            "",
            format_word(&report.best_plain.x_word),
            format_word(&report.best_plain.y_word),
        );
    }

    // Every value above is an exact minimum over all involution
    // factorizations; the witness words re-verify independently.
    let w = sys.element_of_word(&[0, 1, 2]);
    let report = excess_report_for(&sys, &w, &budget)?;
    coxcess::validate_certificate(&sys, &w, &report.best_reflective)
        .expect("certificates re-verify from scratch");
    println!("\ncertificate for the Coxeter element re-verified from its words alone");
    Ok(())
}
