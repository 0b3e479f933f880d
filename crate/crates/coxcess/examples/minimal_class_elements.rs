//! Conjugacy classes of W(B3) with their minimal-length elements X_min and
//! the zero-excess subset X⁰_min.
//!
//!     cargo run --example minimal_class_elements

use coxcess::conjugacy::{all_classes, Budget};
use coxcess::report::format_word;
use coxcess::{ClassContext, CoxeterSystem, CoxeterType};

fn main() -> coxcess::Result<()> {
    let sys = CoxeterSystem::build(&CoxeterType::parse("B3")?)?;
    let budget = Budget::default();
    let classes = all_classes(&sys, &budget)?;
    println!("W(B3) has {} conjugacy classes\n", classes.len());
    println!(
        "{:>6} {:>6} {:>7} {:>8} {:>9}  representative of X0_min",
        "size", "l_min", "|Xmin|", "|X0min|", "cuspidal"
    );
    for class in &classes {
        let ctx = ClassContext::new(&sys, class, &budget)?;
        let x0 = ctx.x0_min(0)?;
        let rep = x0
            .members
            .first()
            .map(|r| format_word(&sys.reduced_word(&r.w)))
            .unwrap_or_default();
        println!(
            "{:>6} {:>6} {:>7} {:>8} {:>9}  {}",
            class.size(),
            class.l_min(),
            x0.x_min_count,
            x0.members.len(),
            sys.is_cuspidal_element(class.representative()),
            if rep.is_empty() { "(identity)" } else { &rep },
        );
    }
    Ok(())
}
