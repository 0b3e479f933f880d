//! Exhaustive check, group by group, that every conjugacy class contains a
//! minimal-length element with e = E = 0, together with its witness pair.
//!
//!     cargo run --example zero_excess_everywhere

use coxcess::conjugacy::Budget;
use coxcess::report::format_word;
use coxcess::{verify_theorem, CoxeterSystem, CoxeterType};

fn main() -> coxcess::Result<()> {
    for name in ["A3", "B3", "D4", "I2(7)", "H3", "A2xB2"] {
        let sys = CoxeterSystem::build(&CoxeterType::parse(name)?)?;
        let report = verify_theorem(&sys, &Budget::default(), 0)?;
        assert!(report.all_pass());
        println!("{name}: all {} classes carry a zero-excess minimal element", report.class_count);
        // show one witness from a class of maximal minimal length
        let row = report.rows.iter().max_by_key(|r| r.l_min).unwrap();
        let (w, cert) = row.witness.as_ref().unwrap();
        println!(
            "  e.g. class of size {:>3}: w = {} = ({})·({})",
            row.size,
            format_word(&sys.reduced_word(w)),
            format_word(&cert.x_word),
            format_word(&cert.y_word),
        );
    }
    Ok(())
}
