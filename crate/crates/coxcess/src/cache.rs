//! On-disk cache for heavy class enumerations.
//!
//! # File layout (format version 1, all integers little-endian)
//!
//! ```text
//! magic           5 bytes   "CXCLS"
//! version         u16
//! type length     u16
//! type descriptor UTF-8     canonical type, e.g. "F4" or "A2xB2"
//! group order     u64
//! root count      u16       |Φ⁺|, bytes per packed element
//! class count     u32
//! classes         repeated:
//!   size          u32
//!   l_min         u32
//!   x_min count   u32
//!   x_min         u32 × count      sorted positions of minimal elements
//!   elements      root count × size bytes, canonical order
//!   disc_of_sorted u32 × size      sorted position -> BFS discovery index
//!   edges         (u32 + u8) × size  discovery -> (parent, letter); root letter 0xFF
//! checksum        u64       FNV-1a 64 of every preceding byte
//! ```
//!
//! The layout is stable across runs and platforms. The checksum covers
//! header and payload, so a flipped byte is reported as a checksum error,
//! while an intact file for a different group reports a type mismatch.

use crate::conjugacy::ConjugacyClass;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::system::CoxeterSystem;
use crate::util::fnv1a64;
use std::path::Path;

const MAGIC: &[u8; 5] = b"CXCLS";
pub const FORMAT_VERSION: u16 = 1;

/// Canonical cache file name for a system.
pub fn cache_file_name(sys: &CoxeterSystem) -> String {
    format!("{}.coxclasses", sys.coxeter_type())
}

pub fn cache_store(sys: &CoxeterSystem, classes: &[ConjugacyClass], path: &Path) -> Result<()> {
    let mut buf = Vec::new();
    buf.extend_from_slice(MAGIC);
    push_u16(&mut buf, FORMAT_VERSION);
    let descriptor = sys.coxeter_type().to_string();
    push_u16(&mut buf, descriptor.len() as u16);
    buf.extend_from_slice(descriptor.as_bytes());
    push_u64(&mut buf, sys.group_order());
    push_u16(&mut buf, sys.n_positive_roots() as u16);
    push_u32(&mut buf, classes.len() as u32);
    for class in classes {
        push_u32(&mut buf, class.elements.len() as u32);
        push_u32(&mut buf, class.l_min as u32);
        push_u32(&mut buf, class.x_min.len() as u32);
        for &x in &class.x_min {
            push_u32(&mut buf, x);
        }
        for e in &class.elements {
            buf.extend_from_slice(e.raw());
        }
        for &d in &class.disc_of_sorted {
            push_u32(&mut buf, d);
        }
        for &(parent, letter) in &class.edges {
            push_u32(&mut buf, parent);
            buf.push(letter);
        }
    }
    let checksum = fnv1a64(&buf);
    push_u64(&mut buf, checksum);
    std::fs::write(path, &buf).map_err(|e| Error::CacheIo(format!("{}: {e}", path.display())))
}

pub fn cache_load(sys: &CoxeterSystem, path: &Path) -> Result<Vec<ConjugacyClass>> {
    let buf =
        std::fs::read(path).map_err(|e| Error::CacheIo(format!("{}: {e}", path.display())))?;
    if buf.len() < MAGIC.len() + 2 + 8 {
        return Err(Error::CacheCorrupt("file too short".into()));
    }
    let (body, tail) = buf.split_at(buf.len() - 8);
    let stored = u64::from_le_bytes(tail.try_into().unwrap());
    if fnv1a64(body) != stored {
        return Err(Error::CacheChecksum);
    }

    let mut r = Reader { buf: body, pos: 0 };
    if r.take(5)? != MAGIC {
        return Err(Error::CacheCorrupt("bad magic".into()));
    }
    let version = r.u16()?;
    if version != FORMAT_VERSION {
        return Err(Error::CacheVersionMismatch { found: version, expected: FORMAT_VERSION });
    }
    let tlen = r.u16()? as usize;
    let descriptor = String::from_utf8(r.take(tlen)?.to_vec())
        .map_err(|_| Error::CacheCorrupt("type descriptor not UTF-8".into()))?;
    let expected = sys.coxeter_type().to_string();
    if descriptor != expected {
        return Err(Error::CacheTypeMismatch { found: descriptor, expected });
    }
    let order = r.u64()?;
    let n_pos = r.u16()? as usize;
    if order != sys.group_order() || n_pos != sys.n_positive_roots() {
        return Err(Error::CacheCorrupt("group parameters disagree with type".into()));
    }
    let class_count = r.u32()? as usize;
    let mut classes = Vec::with_capacity(class_count);
    for _ in 0..class_count {
        let size = r.u32()? as usize;
        let l_min = r.u32()? as usize;
        let x_count = r.u32()? as usize;
        if x_count > size {
            return Err(Error::CacheCorrupt("x_min larger than class".into()));
        }
        let mut x_min = Vec::with_capacity(x_count);
        for _ in 0..x_count {
            x_min.push(r.u32()?);
        }
        let mut elements = Vec::with_capacity(size);
        for _ in 0..size {
            elements.push(Element::from_raw(r.take(n_pos)?.to_vec()));
        }
        if !elements.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::CacheCorrupt("class elements not in canonical order".into()));
        }
        let mut disc_of_sorted = Vec::with_capacity(size);
        for _ in 0..size {
            let d = r.u32()?;
            if d as usize >= size {
                return Err(Error::CacheCorrupt("discovery index out of range".into()));
            }
            disc_of_sorted.push(d);
        }
        let mut edges = Vec::with_capacity(size);
        for _ in 0..size {
            let parent = r.u32()?;
            let letter = r.u8()?;
            edges.push((parent, letter));
        }
        let seed_sorted = disc_of_sorted
            .iter()
            .position(|&d| d == 0)
            .ok_or_else(|| Error::CacheCorrupt("missing BFS root".into()))?;
        let seed = elements[seed_sorted].clone();
        let representative = elements[0].clone();
        classes.push(ConjugacyClass {
            seed,
            representative,
            elements,
            disc_of_sorted,
            edges,
            l_min,
            x_min,
        });
    }
    if r.pos != body.len() {
        return Err(Error::CacheCorrupt("trailing bytes".into()));
    }
    Ok(classes)
}

fn push_u16(buf: &mut Vec<u8>, v: u16) {
    buf.extend_from_slice(&v.to_le_bytes());
}

fn push_u32(buf: &mut Vec<u8>, v: u32) {
    buf.extend_from_slice(&v.to_le_bytes());
}

fn push_u64(buf: &mut Vec<u8>, v: u64) {
    buf.extend_from_slice(&v.to_le_bytes());
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.pos + n > self.buf.len() {
            return Err(Error::CacheCorrupt("truncated".into()));
        }
        let s = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}
