//! Every way of writing (145)(236) ∈ Sym(6) as a product of two involutions,
//! with the reflection-length and length sums of each pair. The minimum
//! length sum over all pairs gives e(w) = 0; restricted to the
//! reflection-additive pairs it gives E(w) = 2.
//!
//!     cargo run --example involution_factorizations

fn main() -> coxcess::Result<()> {
    let doc = coxcess::table1_report()?;
    println!(
        "w = {}   l(w) = {}, L(w) = {}, e(w) = {}, E(w) = {}",
        doc.element, doc.length, doc.reflection_length, doc.excess, doc.reflection_excess
    );
    println!("{} involution factorizations w = x·y:\n", doc.factorizations);
    println!("{:<22} {:<22} {:>10} {:>12}", "x", "y", "L(x)+L(y)", "l(x)+l(y)");
    for row in &doc.rows {
        println!(
            "{:<22} {:<22} {:>10} {:>7}+{}={}",
            row.x, row.y, row.reflection_sum, row.length_x, row.length_y, row.length_sum
        );
    }
    Ok(())
}
