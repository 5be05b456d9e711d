//! Frame ingestion, volume export and synthetic scenes.
//!
//! Two on-disk forms are supported:
//!
//! * a directory of 8-bit binary PGM (`P5`, maxval 255) frames, read in
//!   lexicographic filename order and normalized by 1/255;
//! * a raw volume: three little-endian `u64` dims `m n k` followed by
//!   `m·n·k` little-endian `f64` values in matrix-view order (pixel
//!   `(i, j)` of frame `t` at `i + m·j + m·n·t`).

pub mod keyvalue;
pub mod pgm;
pub mod synth;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::tensor::{Dims, Matrix, Tensor3D};

/// Where a frame sequence comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    FrameDir(PathBuf),
    RawVolume(PathBuf),
}

impl Source {
    /// A directory is read as PGM frames, anything else as a raw volume.
    pub fn detect(path: &Path) -> Self {
        if path.is_dir() {
            Source::FrameDir(path.to_path_buf())
        } else {
            Source::RawVolume(path.to_path_buf())
        }
    }
}

/// Load a clip as its `mn × k` matrix view with entries in `[0, 1]` (PGM) or
/// as stored (raw). Fewer than two frames is an error.
pub fn load_sequence(source: &Source) -> Result<(Matrix, Dims)> {
    let (x, dims) = match source {
        Source::FrameDir(dir) => load_frame_dir(dir)?,
        Source::RawVolume(path) => read_raw(path)?,
    };
    if dims.k < 2 {
        let path = match source {
            Source::FrameDir(p) | Source::RawVolume(p) => p.clone(),
        };
        return Err(Error::Malformed {
            path,
            reason: format!("a sequence needs at least 2 frames, found {}", dims.k),
        });
    }
    Ok((x, dims))
}

fn load_frame_dir(dir: &Path) -> Result<(Matrix, Dims)> {
    let unreadable = |source| Error::Unreadable {
        path: dir.to_path_buf(),
        source,
    };
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(unreadable)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.extension()
                .and_then(|e| e.to_str())
                .is_some_and(|e| e.eq_ignore_ascii_case("pgm"))
        })
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Error::Malformed {
            path: dir.to_path_buf(),
            reason: "no .pgm frames found".into(),
        });
    }

    let mut frames = Vec::with_capacity(files.len());
    let mut shape = None;
    for f in &files {
        let frame = pgm::read(f)?;
        let this = (frame.rows, frame.cols);
        match shape {
            None => shape = Some(this),
            Some(s) if s != this => {
                return Err(Error::DimensionMismatch(format!(
                    "{}: frame is {}x{}, earlier frames are {}x{}",
                    f.display(),
                    this.0,
                    this.1,
                    s.0,
                    s.1
                )))
            }
            Some(_) => {}
        }
        frames.push(frame);
    }
    let (m, n) = shape.expect("at least one frame");
    let dims = Dims::new(m, n, frames.len())?;
    let mut x = Matrix::zeros(dims.pixels(), dims.k);
    for (t, frame) in frames.iter().enumerate() {
        for i in 0..m {
            for j in 0..n {
                x[(i + m * j, t)] = frame.pixels[i * n + j] as f64 / 255.0;
            }
        }
    }
    Ok((x, dims))
}

/// Quantize `[0, 1]` to a byte: clamp, scale by 255, round.
#[inline]
pub fn to_byte(v: f64) -> u8 {
    (v.clamp(0.0, 1.0) * 255.0).round() as u8
}

/// Write `x` as PGM frames into `dir` (`frame_0000.pgm`, ...).
pub fn write_frames(dir: &Path, x: &Matrix, dims: Dims) -> Result<()> {
    dims.check_matrix(x)?;
    fs::create_dir_all(dir).map_err(|source| Error::Unwritable {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut pixels = vec![0u8; dims.pixels()];
    for t in 0..dims.k {
        for i in 0..dims.m {
            for j in 0..dims.n {
                pixels[i * dims.n + j] = to_byte(x[(i + dims.m * j, t)]);
            }
        }
        let frame = pgm::Frame {
            rows: dims.m,
            cols: dims.n,
            pixels: pixels.clone(),
        };
        pgm::write(&dir.join(format!("frame_{t:04}.pgm")), &frame)?;
    }
    Ok(())
}

pub fn write_raw(path: &Path, x: &Matrix, dims: Dims) -> Result<()> {
    dims.check_matrix(x)?;
    let mut buf = Vec::with_capacity(24 + 8 * dims.len());
    for d in [dims.m, dims.n, dims.k] {
        buf.extend_from_slice(&(d as u64).to_le_bytes());
    }
    for v in x.as_slice() {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    let mut f = fs::File::create(path).map_err(|source| Error::Unwritable {
        path: path.to_path_buf(),
        source,
    })?;
    f.write_all(&buf).map_err(|source| Error::Unwritable {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_raw(path: &Path) -> Result<(Matrix, Dims)> {
    let bytes = fs::read(path).map_err(|source| Error::Unreadable {
        path: path.to_path_buf(),
        source,
    })?;
    let malformed = |reason: String| Error::Malformed {
        path: path.to_path_buf(),
        reason,
    };
    if bytes.len() < 24 {
        return Err(malformed(format!("{} bytes is too short for the header", bytes.len())));
    }
    let word = |i: usize| u64::from_le_bytes(bytes[8 * i..8 * i + 8].try_into().expect("8 bytes"));
    let (m, n, k) = (word(0), word(1), word(2));
    let count = m
        .checked_mul(n)
        .and_then(|v| v.checked_mul(k))
        .filter(|&c| c > 0 && c <= (usize::MAX / 8) as u64)
        .ok_or_else(|| malformed(format!("bad dims header {m}x{n}x{k}")))? as usize;
    let body = &bytes[24..];
    if body.len() != 8 * count {
        return Err(Error::DimensionMismatch(format!(
            "{}: header says {m}x{n}x{k} ({count} values) but body holds {} bytes",
            path.display(),
            body.len()
        )));
    }
    let values: Vec<f64> = body
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("8 bytes")))
        .collect();
    let dims = Dims::new(m as usize, n as usize, k as usize)?;
    Ok((Matrix::from_vec(dims.pixels(), dims.k, values), dims))
}

/// Save a volume under `dir` as `<name>.raw`, PGM frames in `<name>/` and a
/// `<name>.txt` sidecar with dims and value range.
pub fn save_volume(dir: &Path, name: &str, x: &Matrix, dims: Dims) -> Result<()> {
    fs::create_dir_all(dir).map_err(|source| Error::Unwritable {
        path: dir.to_path_buf(),
        source,
    })?;
    write_raw(&dir.join(format!("{name}.raw")), x, dims)?;
    write_frames(&dir.join(name), x, dims)?;
    let (lo, hi) = if x.is_empty() { (0.0, 0.0) } else { (x.min(), x.max()) };
    let sidecar = format!(
        "name = {name}\nm = {}\nn = {}\nk = {}\nmin = {lo:e}\nmax = {hi:e}\nlayout = column-major frames, pixel (i,j) of frame t at i + m*j + m*n*t\n",
        dims.m, dims.n, dims.k
    );
    let side = dir.join(format!("{name}.txt"));
    fs::write(&side, sidecar).map_err(|source| Error::Unwritable { path: side, source })
}

/// Volume form of [`save_volume`].
pub fn save_tensor(dir: &Path, name: &str, t: &Tensor3D) -> Result<()> {
    save_volume(dir, name, &t.to_matrix(), t.dims())
}
