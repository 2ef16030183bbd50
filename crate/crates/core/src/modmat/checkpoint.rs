//! Binary snapshots of a [`FoldedMatrix`].
//!
//! Layout: 8-byte magic, then `n`, `width`, `p`, `seed`, `rows_ingested`
//! as little-endian u64, then the `n × width` cells as little-endian u32.

use std::fs;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use super::fold::{FoldConfig, FoldedMatrix};
use crate::error::{Error, Result};

const MAGIC: &[u8; 8] = b"LKVFOLD1";

impl FoldedMatrix {
    /// Writes a snapshot atomically (temporary file, then rename).
    pub fn save_checkpoint(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut w = BufWriter::new(fs::File::create(&tmp)?);
            w.write_all(MAGIC)?;
            let cfg = self.config();
            for v in [cfg.n_rows_folded as u64, self.width() as u64, cfg.prime, cfg.rng_seed, self.rows_ingested()] {
                w.write_all(&v.to_le_bytes())?;
            }
            for x in self.data() {
                w.write_all(&x.to_le_bytes())?;
            }
            w.into_inner().map_err(|e| e.into_error())?.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Restores a snapshot written for the same configuration.
    pub fn load_checkpoint(cfg: FoldConfig, path: &Path) -> Result<Self> {
        let mut m = FoldedMatrix::new(cfg)?;
        let mut bytes = Vec::new();
        fs::File::open(path)?.read_to_end(&mut bytes)?;
        let bad = |msg: &str| Error::Checkpoint(format!("{}: {msg}", path.display()));
        if bytes.len() < 48 || &bytes[..8] != MAGIC {
            return Err(bad("not a checkpoint file"));
        }
        let header: Vec<u64> =
            bytes[8..48].chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().expect("8 bytes"))).collect();
        let cfg = m.config();
        let expected = [cfg.n_rows_folded as u64, m.width() as u64, cfg.prime, cfg.rng_seed];
        if header[..4] != expected {
            return Err(bad(&format!("header {:?} does not match configuration {:?}", &header[..4], expected)));
        }
        let body = &bytes[48..];
        if body.len() != m.data().len() * 4 {
            return Err(bad("truncated body"));
        }
        let data: Vec<u32> = body.chunks_exact(4).map(|c| u32::from_le_bytes(c.try_into().expect("4 bytes"))).collect();
        if data.iter().any(|&x| x as u64 >= cfg.prime) {
            return Err(bad("cell not reduced"));
        }
        m.restore(data, header[4]);
        Ok(m)
    }
}
