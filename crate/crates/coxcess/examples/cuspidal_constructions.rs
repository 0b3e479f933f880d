//! Minimal-length cuspidal elements of B_n and D_n built from a partition:
//! for λ = (λ₁ ≥ … ≥ λₖ) the pair of involutions (τ, σ) multiplies to an
//! all-negative element of cycle type λ whose length attains the class
//! minimum Σ(λᵢ + 2μᵢ) (B) or Σ(λᵢ − 1 + 2μᵢ) (D), so the pair itself is a
//! zero-excess certificate.
//!
//!     cargo run --example cuspidal_constructions

use coxcess::signed::{construct_min_cuspidal, to_element, BdFamily, CuspidalPartition};
use coxcess::{CoxeterSystem, CoxeterType};

fn main() -> coxcess::Result<()> {
    let b5 = CoxeterSystem::build(&CoxeterType::parse("B5")?)?;
    println!("cuspidal classes of W(B5), one construction per partition of 5:\n");
    println!("{:<14} {:<22} {:<14} {:>7} {:>12}", "partition", "tau", "sigma", "l(w)", "= l(t)+l(s)");
    for lambda in CuspidalPartition::all_of(5) {
        let mc = construct_min_cuspidal(&lambda, BdFamily::B)?;
        let w = to_element(&mc.w, &b5)?;
        let tau = to_element(&mc.tau, &b5)?;
        let sigma = to_element(&mc.sigma, &b5)?;
        assert_eq!(b5.multiply(&tau, &sigma), w);
        assert_eq!(b5.length(&w), mc.min_length);
        println!(
            "{:<14} {:<22} {:<14} {:>7} {:>7}+{}",
            format!("{:?}", lambda.parts()),
            mc.tau.cycle_string(),
            mc.sigma.cycle_string(),
            b5.length(&w),
            b5.length(&tau),
            b5.length(&sigma),
        );
    }

    println!("\nand in W(D6), partitions with an even number of parts:\n");
    let d6 = CoxeterSystem::build(&CoxeterType::parse("D6")?)?;
    for lambda in CuspidalPartition::all_of(6) {
        let Ok(mc) = construct_min_cuspidal(&lambda, BdFamily::D) else {
            continue;
        };
        let w = to_element(&mc.w, &d6)?;
        println!(
            "{:<14} w = {:<26} l(w) = {:>2} (class minimum {})",
            format!("{:?}", lambda.parts()),
            mc.w.cycle_string(),
            d6.length(&w),
            mc.min_length,
        );
    }
    Ok(())
}
