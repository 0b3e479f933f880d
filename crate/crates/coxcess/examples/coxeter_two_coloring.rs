//! Zero-excess Coxeter elements from the 2-coloring of the Coxeter graph:
//! the graph of a finite Coxeter group is a forest, so the generators split
//! into two sets of pairwise-commuting reflections whose products x and y
//! give a minimal-length Coxeter element w = xy with e(w) = E(w) = 0.
//!
//!     cargo run --example coxeter_two_coloring

use coxcess::report::format_word;
use coxcess::signed::coxeter_bicolored;
use coxcess::{CoxeterSystem, CoxeterType};

fn main() -> coxcess::Result<()> {
    for name in ["A5", "D5", "E6", "F4", "H4", "I2(9)"] {
        let sys = CoxeterSystem::build(&CoxeterType::parse(name)?)?;
        let bc = coxeter_bicolored(&sys);
        assert!(sys.is_involution(&bc.x) && sys.is_involution(&bc.y));
        assert_eq!(sys.length(&bc.w), sys.rank());
        assert_eq!(sys.length(&bc.x) + sys.length(&bc.y), sys.rank());
        println!(
            "{name:<6} colors {:?} / {:?}  w = {} (length {} = rank)",
            bc.part_one.iter().map(|g| g + 1).collect::<Vec<_>>(),
            bc.part_two.iter().map(|g| g + 1).collect::<Vec<_>>(),
            format_word(&sys.reduced_word(&bc.w)),
            sys.length(&bc.w),
        );
    }
    Ok(())
}
