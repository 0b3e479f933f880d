//! The Sym(4k) family separating excess from reflection excess: w is a
//! product of two disjoint 2k-cycles with an interleaving factorization
//! proving e(w) = 0, while E(w) grows at least like 4(k−1)².
//!
//!     cargo run --example large_reflection_excess

use coxcess::signed::{bigxs, sym_excess};

fn main() -> coxcess::Result<()> {
    println!("{:>3} {:>7} {:>6} {:>6} {:>4} {:>6} {:>10}", "k", "degree", "l(w)", "L(w)", "e", "E", "4(k-1)^2");
    for k in 1..=3 {
        let bx = bigxs(k)?;
        assert_eq!(bx.x.then(&bx.y), bx.w);
        let a = sym_excess(&bx.w, 10_000_000)?;
        let bound = 4 * (k - 1) * (k - 1);
        assert!(a.reflection_excess >= bound);
        println!(
            "{k:>3} {:>7} {:>6} {:>6} {:>4} {:>6} {:>10}{}",
            4 * k,
            a.length,
            a.reflection_length,
            a.excess,
            a.reflection_excess,
            bound,
            if bx.degenerate { "  (degenerate)" } else { "" },
        );
    }
    let b3 = bigxs(3)?;
    println!("\nk = 3 construction in Sym(12):");
    println!("  w = {} · {}", b3.w1.cycle_string(), b3.w2.cycle_string());
    println!("  x = {}", b3.x.cycle_string());
    println!("  y = {}", b3.y.cycle_string());
    Ok(())
}
