//! Compressed clique-cover bytes: each clique's ascending 0-based ids become
//! first-value-plus-gaps, each integer varbyte-encoded (7-bit chunks, least
//! significant first, continuation bit set on all but the final byte). A
//! per-clique offset table gives independent random access.
//!
//! On disk: magic `DCCE`, version byte 1, `n` and `k` as 8-byte little-endian,
//! `k + 1` offsets as 8-byte little-endian, then the payload.

use std::io::{Read, Write};

use crate::cover::CliqueCover;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"DCCE";
const VERSION: u8 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedCover {
    n: usize,
    offsets: Vec<u64>,
    payload: Vec<u8>,
}

fn push_varbyte(out: &mut Vec<u8>, mut value: u64) {
    loop {
        let chunk = (value & 0x7f) as u8;
        value >>= 7;
        if value == 0 {
            out.push(chunk);
            return;
        }
        out.push(chunk | 0x80);
    }
}

/// Reads one varbyte integer from `bytes` starting at `*pos`, advancing it.
fn read_varbyte(bytes: &[u8], pos: &mut usize, end: usize) -> Result<u64> {
    let mut value = 0u64;
    let mut shift = 0u32;
    loop {
        if *pos >= end {
            return Err(Error::Decode(
                "continuation bit set on final byte of range".into(),
            ));
        }
        if shift >= 64 {
            return Err(Error::Decode("varbyte integer exceeds 64 bits".into()));
        }
        let byte = bytes[*pos];
        *pos += 1;
        value |= u64::from(byte & 0x7f) << shift;
        if byte & 0x80 == 0 {
            return Ok(value);
        }
        shift += 7;
    }
}

impl EncodedCover {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_cliques(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn payload_len(&self) -> usize {
        self.payload.len()
    }

    pub fn offsets(&self) -> &[u64] {
        &self.offsets
    }

    /// Decodes clique `i` into `buf`, touching only its byte range. The first
    /// id is stored absolute, so no earlier clique is read.
    pub fn decode_clique(&self, i: usize, buf: &mut Vec<u32>) -> Result<()> {
        if i >= self.num_cliques() {
            return Err(Error::Decode(format!(
                "clique index {i} out of range (k = {})",
                self.num_cliques()
            )));
        }
        buf.clear();
        let mut pos = self.offsets[i] as usize;
        let end = self.offsets[i + 1] as usize;
        let mut prev: u64 = 0;
        let mut first = true;
        while pos < end {
            let delta = read_varbyte(&self.payload, &mut pos, end)?;
            let value = if first { delta } else { prev + delta };
            if value >= self.n as u64 {
                return Err(Error::Decode(format!(
                    "decoded vertex {value} out of range (n = {})",
                    self.n
                )));
            }
            buf.push(value as u32);
            prev = value;
            first = false;
        }
        Ok(())
    }

    pub fn decode_cover(&self) -> Result<CliqueCover> {
        let mut cliques = Vec::with_capacity(self.num_cliques());
        let mut buf = Vec::new();
        for i in 0..self.num_cliques() {
            self.decode_clique(i, &mut buf)?;
            cliques.push(buf.clone());
        }
        CliqueCover::from_cliques(self.n, cliques)
    }

    pub fn write_to(&self, writer: impl Write) -> Result<()> {
        let mut w = std::io::BufWriter::new(writer);
        w.write_all(MAGIC)?;
        w.write_all(&[VERSION])?;
        w.write_all(&(self.n as u64).to_le_bytes())?;
        w.write_all(&(self.num_cliques() as u64).to_le_bytes())?;
        for off in &self.offsets {
            w.write_all(&off.to_le_bytes())?;
        }
        w.write_all(&self.payload)?;
        w.flush()?;
        Ok(())
    }

    pub fn read_from(reader: impl Read) -> Result<EncodedCover> {
        let mut r = std::io::BufReader::new(reader);
        let mut magic = [0u8; 4];
        read_exact(&mut r, &mut magic, "magic")?;
        if &magic != MAGIC {
            return Err(Error::BadContainer(format!(
                "bad magic {magic:02x?}, expected {MAGIC:02x?}"
            )));
        }
        let mut version = [0u8; 1];
        read_exact(&mut r, &mut version, "version")?;
        if version[0] != VERSION {
            return Err(Error::BadContainer(format!(
                "unsupported version {}",
                version[0]
            )));
        }
        let n = read_u64(&mut r, "n")? as usize;
        let k = read_u64(&mut r, "k")? as usize;
        let mut offsets = Vec::with_capacity(k + 1);
        for _ in 0..=k {
            offsets.push(read_u64(&mut r, "offset")?);
        }
        if offsets[0] != 0 {
            return Err(Error::BadContainer("offsets must start at 0".into()));
        }
        if offsets.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BadContainer("offsets must be non-decreasing".into()));
        }
        let mut payload = Vec::new();
        r.read_to_end(&mut payload)?;
        if payload.len() as u64 != offsets[k] {
            return Err(Error::BadContainer(format!(
                "payload is {} bytes, offsets end at {}",
                payload.len(),
                offsets[k]
            )));
        }
        Ok(EncodedCover {
            n,
            offsets,
            payload,
        })
    }

    pub fn read_from_path(path: &std::path::Path) -> Result<EncodedCover> {
        EncodedCover::read_from(std::fs::File::open(path)?)
    }

    pub fn write_to_path(&self, path: &std::path::Path) -> Result<()> {
        self.write_to(std::fs::File::create(path)?)
    }
}

fn read_exact(r: &mut impl Read, buf: &mut [u8], what: &str) -> Result<()> {
    r.read_exact(buf)
        .map_err(|_| Error::BadContainer(format!("truncated while reading {what}")))
}

fn read_u64(r: &mut impl Read, what: &str) -> Result<u64> {
    let mut buf = [0u8; 8];
    read_exact(r, &mut buf, what)?;
    Ok(u64::from_le_bytes(buf))
}

/// Encodes each clique as the varbytes of its first id followed by the gaps
/// between consecutive ids (all 0-based).
pub fn encode_cover(cover: &CliqueCover) -> EncodedCover {
    let mut payload = Vec::new();
    let mut offsets = Vec::with_capacity(cover.num_cliques() + 1);
    offsets.push(0u64);
    for clique in cover.cliques() {
        let mut prev = 0u64;
        for (i, &v) in clique.iter().enumerate() {
            let v = v as u64;
            push_varbyte(&mut payload, if i == 0 { v } else { v - prev });
            prev = v;
        }
        offsets.push(payload.len() as u64);
    }
    EncodedCover {
        n: cover.n(),
        offsets,
        payload,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cover(n: usize, cliques: &[&[u32]]) -> CliqueCover {
        CliqueCover::from_cliques(n, cliques.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn gap_bytes_by_hand() {
        let enc = encode_cover(&cover(11, &[&[3, 5, 10]]));
        assert_eq!(enc.payload, vec![0x03, 0x02, 0x05]);
        assert_eq!(enc.offsets, vec![0, 3]);
    }

    #[test]
    fn two_byte_varbyte_by_hand() {
        // 300 = 44 + 2*128: low chunk 44 with continuation bit, then 2.
        let enc = encode_cover(&cover(301, &[&[300]]));
        assert_eq!(enc.payload, vec![0xac, 0x02]);
    }

    #[test]
    fn empty_cover() {
        let enc = encode_cover(&cover(5, &[]));
        assert_eq!(enc.offsets, vec![0]);
        assert!(enc.payload.is_empty());
        assert_eq!(enc.decode_cover().unwrap().num_cliques(), 0);
    }

    #[test]
    fn roundtrip_and_random_access() {
        let c = cover(600, &[&[0, 1, 2], &[5, 300, 599], &[7, 8]]);
        let enc = encode_cover(&c);
        assert_eq!(enc.decode_cover().unwrap(), c);
        let mut buf = Vec::new();
        enc.decode_clique(1, &mut buf).unwrap();
        assert_eq!(buf, vec![5, 300, 599]);
        assert!(enc.decode_clique(3, &mut buf).is_err());
    }

    #[test]
    fn random_cover_random_access_equals_full_decode() {
        let g = crate::generate::gen_er(80, 0.5, 41).unwrap();
        let dcc = crate::construct::global_admissibility(&g);
        let enc = encode_cover(&dcc.cover);
        let full = enc.decode_cover().unwrap();
        let mut buf = Vec::new();
        for i in (0..enc.num_cliques()).rev() {
            enc.decode_clique(i, &mut buf).unwrap();
            assert_eq!(buf.as_slice(), full.clique(i));
        }
        // Size bound: at most 5 bytes per assignment for 32-bit ids.
        assert!(enc.payload_len() <= 5 * dcc.cover.size());
    }

    #[test]
    fn container_roundtrip_bit_exact() {
        let c = cover(3, &[&[0, 1, 2]]);
        let enc = encode_cover(&c);
        let mut bytes = Vec::new();
        enc.write_to(&mut bytes).unwrap();
        let back = EncodedCover::read_from(bytes.as_slice()).unwrap();
        assert_eq!(back, enc);
        let mut again = Vec::new();
        back.write_to(&mut again).unwrap();
        assert_eq!(bytes, again);
    }

    #[test]
    fn corrupted_container_rejected() {
        let enc = encode_cover(&cover(3, &[&[0, 1]]));
        let mut bytes = Vec::new();
        enc.write_to(&mut bytes).unwrap();
        let mut bad_magic = bytes.clone();
        bad_magic[0] = b'X';
        assert!(matches!(
            EncodedCover::read_from(bad_magic.as_slice()),
            Err(Error::BadContainer(_))
        ));
        let truncated = &bytes[..bytes.len() - 1];
        assert!(EncodedCover::read_from(truncated).is_err());
    }

    #[test]
    fn dangling_continuation_bit_rejected() {
        let enc = EncodedCover {
            n: 400,
            offsets: vec![0, 1],
            payload: vec![0xac],
        };
        let mut buf = Vec::new();
        let err = enc.decode_clique(0, &mut buf).unwrap_err();
        assert!(matches!(err, Error::Decode(_)), "{err}");
    }
}
