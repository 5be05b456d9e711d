//! Binary greymap (`P5`) frames, 8-bit only.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// One 8-bit frame, pixels row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub rows: usize,
    pub cols: usize,
    pub pixels: Vec<u8>,
}

pub fn read(path: &Path) -> Result<Frame> {
    let bytes = fs::read(path).map_err(|source| Error::Unreadable {
        path: path.to_path_buf(),
        source,
    })?;
    decode(&bytes).map_err(|e| match e {
        DecodeError::Malformed(reason) => Error::Malformed {
            path: path.to_path_buf(),
            reason,
        },
        DecodeError::Depth(maxval) => Error::UnsupportedDepth {
            path: path.to_path_buf(),
            maxval,
        },
    })
}

pub fn write(path: &Path, frame: &Frame) -> Result<()> {
    fs::write(path, encode(frame)).map_err(|source| Error::Unwritable {
        path: path.to_path_buf(),
        source,
    })
}

pub fn encode(frame: &Frame) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", frame.cols, frame.rows).into_bytes();
    out.extend_from_slice(&frame.pixels);
    out
}

#[derive(Debug)]
enum DecodeError {
    Malformed(String),
    Depth(u32),
}

fn decode(bytes: &[u8]) -> std::result::Result<Frame, DecodeError> {
    let bad = |s: &str| DecodeError::Malformed(s.to_string());
    if bytes.len() < 2 || &bytes[..2] != b"P5" {
        return Err(bad("not a binary PGM (missing P5 magic)"));
    }
    let mut pos = 2;
    let mut header = [0u32; 3];
    for slot in header.iter_mut() {
        // skip whitespace and comments
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    while bytes.get(pos).is_some_and(|&b| b != b'\n') {
                        pos += 1;
                    }
                }
                _ => break,
            }
        }
        let start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        if start == pos {
            return Err(bad("truncated header"));
        }
        *slot = std::str::from_utf8(&bytes[start..pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("header number out of range"))?;
    }
    // exactly one whitespace byte separates the header from the raster
    if !bytes.get(pos).is_some_and(u8::is_ascii_whitespace) {
        return Err(bad("missing whitespace after maxval"));
    }
    pos += 1;

    let [cols, rows, maxval] = header;
    if maxval != 255 {
        return Err(DecodeError::Depth(maxval));
    }
    if cols == 0 || rows == 0 {
        return Err(bad("zero-sized frame"));
    }
    let count = rows as usize * cols as usize;
    let raster = &bytes[pos..];
    if raster.len() < count {
        return Err(DecodeError::Malformed(format!(
            "raster has {} bytes, expected {count}",
            raster.len()
        )));
    }
    Ok(Frame {
        rows: rows as usize,
        cols: cols as usize,
        pixels: raster[..count].to_vec(),
    })
}
