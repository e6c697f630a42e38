//! On-disk product tables.
//!
//! One file per `(type, Δ(P))`: a version byte, the SHA-256 of the payload,
//! then the gzip-compressed canonical JSON
//! `{datum, parabolic, triples: [[u, v, w, d], …]}` with elements written as
//! reduced words. Files are written to a temporary file and renamed into
//! place, so readers never observe a partial table.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use flate2::read::GzDecoder;
use flate2::write::GzEncoder;
use flate2::Compression;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::schubert::{install_products, product_table};
use crate::weyl::{parse_element, ParabolicDatum};

pub const CACHE_VERSION: u8 = 1;
pub const CACHE_ENV: &str = "BKSCHUBERT_CACHE";
const EXTENSION: &str = "bkc";

/// `$BKSCHUBERT_CACHE`, or `./.bkcache`.
pub fn default_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".bkcache"))
}

fn cache_err(e: impl std::fmt::Display) -> Error {
    Error::Cache(e.to_string())
}

pub fn file_name(parabolic: &ParabolicDatum) -> String {
    let dp: Vec<String> = parabolic.delta_p().iter().map(|k| (k + 1).to_string()).collect();
    format!(
        "{}_P{}.{EXTENSION}",
        parabolic.datum().label(),
        if dp.is_empty() { "0".into() } else { dp.join("-") }
    )
}

fn header(parabolic: &ParabolicDatum) -> (Value, Value) {
    (
        parabolic.datum().json(),
        json!({
            "lambda": parabolic.lambda().0,
            "delta_p": parabolic.delta_p(),
        }),
    )
}

/// Serialises the full product table of a parabolic.
pub fn encode(parabolic: &ParabolicDatum) -> Result<Vec<u8>> {
    let d = parabolic.datum();
    let word = |i: usize| parabolic.element(i).word_string(d);
    let mut triples = Vec::new();
    for ((u, v), terms) in product_table(parabolic)? {
        for (w, c) in terms {
            triples.push(json!([word(u), word(v), word(w), c]));
        }
    }
    let (datum, par) = header(parabolic);
    let doc = json!({"datum": datum, "parabolic": par, "triples": triples});
    let text = serde_json::to_vec(&doc).map_err(cache_err)?;
    let mut enc = GzEncoder::new(Vec::new(), Compression::default());
    enc.write_all(&text).map_err(cache_err)?;
    let payload = enc.finish().map_err(cache_err)?;
    let mut out = Vec::with_capacity(payload.len() + 33);
    out.push(CACHE_VERSION);
    out.extend_from_slice(Sha256::digest(&payload).as_slice());
    out.extend_from_slice(&payload);
    Ok(out)
}

/// Checks version and checksum and returns the JSON document.
pub fn decode(bytes: &[u8]) -> Result<Value> {
    if bytes.len() < 33 {
        return Err(Error::Cache("truncated cache file".into()));
    }
    if bytes[0] != CACHE_VERSION {
        return Err(Error::Cache(format!(
            "cache version {} (expected {CACHE_VERSION})",
            bytes[0]
        )));
    }
    let payload = &bytes[33..];
    if Sha256::digest(payload).as_slice() != &bytes[1..33] {
        return Err(Error::Cache("checksum mismatch".into()));
    }
    let mut text = Vec::new();
    GzDecoder::new(payload)
        .read_to_end(&mut text)
        .map_err(cache_err)?;
    serde_json::from_slice(&text).map_err(cache_err)
}

/// Writes the table for `parabolic` into `dir`, returning the file path.
pub fn write(dir: &Path, parabolic: &ParabolicDatum) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(cache_err)?;
    let bytes = encode(parabolic)?;
    let path = dir.join(file_name(parabolic));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(cache_err)?;
    tmp.write_all(&bytes).map_err(cache_err)?;
    tmp.persist(&path).map_err(cache_err)?;
    Ok(path)
}

/// Loads a table into the in-memory product memo. Returns the number of
/// triples, or `None` when no file exists.
pub fn load(dir: &Path, parabolic: &ParabolicDatum) -> Result<Option<usize>> {
    let path = dir.join(file_name(parabolic));
    if !path.exists() {
        return Ok(None);
    }
    let bytes = fs::read(&path).map_err(cache_err)?;
    let doc = decode(&bytes)?;
    let (datum, par) = header(parabolic);
    if doc["datum"] != datum || doc["parabolic"] != par {
        return Err(Error::Cache(format!(
            "{} describes a different flag variety",
            path.display()
        )));
    }
    let d = parabolic.datum();
    let lookup = |v: &Value| -> Result<usize> {
        let s = v
            .as_str()
            .ok_or_else(|| Error::Cache("malformed triple".into()))?;
        parabolic.require_index(&parse_element(d, s)?)
    };
    let triples = doc["triples"]
        .as_array()
        .ok_or_else(|| Error::Cache("missing triples".into()))?;
    let mut table: std::collections::BTreeMap<(usize, usize), Vec<(usize, i64)>> =
        std::collections::BTreeMap::new();
    // every pair with complementary-or-less degree has an entry, possibly empty
    for u in 0..parabolic.len() {
        for v in u..parabolic.len() {
            if parabolic.codim(u) + parabolic.codim(v) <= parabolic.dim() {
                table.insert((u, v), Vec::new());
            }
        }
    }
    for t in triples {
        let t = t
            .as_array()
            .filter(|t| t.len() == 4)
            .ok_or_else(|| Error::Cache("malformed triple".into()))?;
        let (u, v, w) = (lookup(&t[0])?, lookup(&t[1])?, lookup(&t[2])?);
        let c = t[3]
            .as_i64()
            .ok_or_else(|| Error::Cache("malformed coefficient".into()))?;
        table.entry((u.min(v), u.max(v))).or_default().push((w, c));
    }
    let n = triples.len();
    install_products(
        parabolic,
        table.into_iter().map(|(k, mut v)| {
            v.sort_unstable();
            (k, v)
        }),
    );
    Ok(Some(n))
}

/// Loads the table if present, otherwise computes and writes it. A file that
/// fails to decode is replaced. Returns `true` on a cache hit.
pub fn load_or_build(dir: &Path, parabolic: &ParabolicDatum) -> Result<bool> {
    match load(dir, parabolic) {
        Ok(Some(_)) => return Ok(true),
        Ok(None) | Err(Error::Cache(_)) => {}
        Err(e) => return Err(e),
    }
    write(dir, parabolic)?;
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheEntry {
    pub file: String,
    pub bytes: u64,
    pub valid: bool,
}

pub fn info(dir: &Path) -> Result<Vec<CacheEntry>> {
    if !dir.exists() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).map_err(cache_err)? {
        let path = entry.map_err(cache_err)?.path();
        if path.extension().and_then(|e| e.to_str()) != Some(EXTENSION) {
            continue;
        }
        let bytes = fs::read(&path).map_err(cache_err)?;
        out.push(CacheEntry {
            file: path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default(),
            bytes: bytes.len() as u64,
            valid: decode(&bytes).is_ok(),
        });
    }
    out.sort_by(|a, b| a.file.cmp(&b.file));
    Ok(out)
}

/// Removes all table files; returns how many were deleted.
pub fn clear(dir: &Path) -> Result<usize> {
    let mut n = 0;
    for e in info(dir)? {
        fs::remove_file(dir.join(&e.file)).map_err(cache_err)?;
        n += 1;
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{RootDatum, Series};
    use crate::schubert::structure_constants;
    use std::sync::Arc;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let d = Arc::new(RootDatum::new(Series::A, 3).unwrap());
        let p = ParabolicDatum::from_complement(d, &[1]).unwrap();
        assert_eq!(load(dir.path(), &p).unwrap(), None);
        assert!(!load_or_build(dir.path(), &p).unwrap());
        assert!(load_or_build(dir.path(), &p).unwrap());
        let entries = info(dir.path()).unwrap();
        assert_eq!(entries.len(), 1);
        assert!(entries[0].valid);
        let sq = structure_constants(&p, p.divisor_index(1).unwrap(), p.divisor_index(1).unwrap())
            .unwrap();
        assert_eq!(sq.len(), 2);

        let path = dir.path().join(&entries[0].file);
        let mut bytes = fs::read(&path).unwrap();
        let last = bytes.len() - 1;
        bytes[last] ^= 0xff;
        assert!(matches!(decode(&bytes), Err(Error::Cache(_))));
        bytes[0] = 99;
        assert!(decode(&bytes).unwrap_err().to_string().contains("version"));
        assert_eq!(clear(dir.path()).unwrap(), 1);
        assert!(info(dir.path()).unwrap().is_empty());
    }

    #[test]
    fn corrupt_files_are_rebuilt() {
        let dir = tempfile::tempdir().unwrap();
        let d = Arc::new(RootDatum::new(Series::A, 2).unwrap());
        let p = ParabolicDatum::borel(d).unwrap();
        load_or_build(dir.path(), &p).unwrap();
        let path = dir.path().join(&info(dir.path()).unwrap()[0].file);
        let mut bytes = fs::read(&path).unwrap();
        let last = bytes.len() - 1;
        bytes[last] ^= 0xff;
        fs::write(&path, &bytes).unwrap();
        assert!(!info(dir.path()).unwrap()[0].valid);
        assert!(!load_or_build(dir.path(), &p).unwrap());
        assert!(info(dir.path()).unwrap()[0].valid);
        assert!(load_or_build(dir.path(), &p).unwrap());
    }

    #[test]
    fn encoding_is_deterministic() {
        let d = Arc::new(RootDatum::new(Series::B, 2).unwrap());
        let p = ParabolicDatum::borel(d).unwrap();
        assert_eq!(encode(&p).unwrap(), encode(&p).unwrap());
        let doc = decode(&encode(&p).unwrap()).unwrap();
        assert_eq!(doc["datum"]["series"], "B2");
    }
}
