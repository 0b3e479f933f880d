//! Persisting a heavy class enumeration and reloading it bit-for-bit.
//!
//!     cargo run --example class_cache

use coxcess::cache::{cache_file_name, cache_load, cache_store};
use coxcess::conjugacy::{all_classes, Budget};
use coxcess::{CoxeterSystem, CoxeterType};

fn main() -> coxcess::Result<()> {
    let sys = CoxeterSystem::build(&CoxeterType::parse("F4")?)?;
    let classes = all_classes(&sys, &Budget::default())?;
    let dir = std::env::temp_dir().join("coxcess-example-cache");
    std::fs::create_dir_all(&dir).map_err(|e| coxcess::Error::CacheIo(e.to_string()))?;
    let path = dir.join(cache_file_name(&sys));

    cache_store(&sys, &classes, &path)?;
    let bytes = std::fs::metadata(&path).map(|m| m.len()).unwrap_or(0);
    println!("stored {} classes of F4 in {} ({bytes} bytes)", classes.len(), path.display());

    let loaded = cache_load(&sys, &path)?;
    assert_eq!(loaded.len(), classes.len());
    for (a, b) in classes.iter().zip(&loaded) {
        assert_eq!(a.elements(), b.elements());
        assert_eq!(a.l_min(), b.l_min());
    }
    println!("reloaded and verified identical");

    // loading against the wrong system is a type mismatch, not silent reuse
    let b3 = CoxeterSystem::build(&CoxeterType::parse("B3")?)?;
    match cache_load(&b3, &path) {
        Err(coxcess::Error::CacheTypeMismatch { found, expected }) => {
            println!("loading as B3 correctly fails: cache holds {found}, wanted {expected}");
        }
        _ => unreachable!(),
    }
    std::fs::remove_dir_all(&dir).ok();
    Ok(())
}
