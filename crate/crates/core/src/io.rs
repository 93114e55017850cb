//! Binary field dumps and CSV slices.
//!
//! Dump layout: a 32-byte header — magic `GSFD`, version `u32`, dimension
//! `u32`, points per axis `u32`, box length `f64`, 8 reserved bytes — all
//! little-endian, followed by `N^n` interleaved `(re, im)` `f64` pairs in
//! row-major order.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grid::Grid;

const MAGIC: &[u8; 4] = b"GSFD";
const VERSION: u32 = 1;

pub fn write_field(path: impl AsRef<Path>, field: &Field) -> Result<()> {
    let grid = field.grid();
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(grid.dim() as u32).to_le_bytes())?;
    w.write_all(&(grid.points_per_axis() as u32).to_le_bytes())?;
    w.write_all(&grid.box_length().to_le_bytes())?;
    w.write_all(&[0u8; 8])?;
    for v in field.values() {
        w.write_all(&v.re.to_le_bytes())?;
        w.write_all(&v.im.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_field(path: impl AsRef<Path>) -> Result<Field> {
    let mut r = BufReader::new(File::open(&path)?);
    let mut header = [0u8; 32];
    r.read_exact(&mut header)
        .map_err(|_| Error::BadDump("truncated header".into()))?;
    if &header[0..4] != MAGIC {
        return Err(Error::BadDump("bad magic".into()));
    }
    let version = u32::from_le_bytes(header[4..8].try_into().unwrap());
    if version != VERSION {
        return Err(Error::BadDump(format!("unsupported version {version}")));
    }
    let n = u32::from_le_bytes(header[8..12].try_into().unwrap()) as usize;
    let points = u32::from_le_bytes(header[12..16].try_into().unwrap()) as usize;
    let length = f64::from_le_bytes(header[16..24].try_into().unwrap());
    let grid = Grid::new(n, points, length)?;

    let total = grid.total_points();
    let mut payload = vec![0u8; total * 16];
    r.read_exact(&mut payload)
        .map_err(|_| Error::BadDump("truncated payload".into()))?;
    let values = (0..total)
        .map(|i| {
            let re = f64::from_le_bytes(payload[16 * i..16 * i + 8].try_into().unwrap());
            let im = f64::from_le_bytes(payload[16 * i + 8..16 * i + 16].try_into().unwrap());
            C64::new(re, im)
        })
        .collect();
    Field::new(grid, values)
}

/// Write the axis-0 line through the box center as CSV (x, re, im, abs).
/// For n = 1 this is the whole field.
pub fn write_slice_csv(path: impl AsRef<Path>, field: &Field) -> Result<()> {
    let grid = field.grid();
    let n = grid.points_per_axis();
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "x,re,im,abs")?;
    let center = n / 2;
    for j in 0..n {
        let mut multi = [center; crate::grid::MAX_DIM];
        multi[0] = j;
        let idx = grid.multi_to_index(&multi[..grid.dim()]);
        let x = grid.position(idx)[0];
        let v = field.values()[idx];
        writeln!(w, "{x:.17e},{:.17e},{:.17e},{:.17e}", v.re, v.im, v.norm())?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dump_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.gsfd");
        let grid = Grid::new(2, 8, 5.0).unwrap();
        let f = Field::from_fn(grid, |x| C64::new(x[0] * 0.5 - x[1], x[1] * 2.0));
        write_field(&path, &f).unwrap();
        let back = read_field(&path).unwrap();
        assert_eq!(back.grid(), f.grid());
        assert_eq!(back.values(), f.values());

        // Header size check: 32 bytes + 16 per sample.
        let bytes = std::fs::metadata(&path).unwrap().len();
        assert_eq!(bytes, 32 + 16 * grid.total_points() as u64);
    }

    #[test]
    fn rejects_malformed_dumps() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.gsfd");
        std::fs::write(&path, b"NOPE").unwrap();
        assert!(matches!(read_field(&path), Err(Error::BadDump(_))));
    }

    #[test]
    fn slice_csv_has_header_and_rows() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("slice.csv");
        let grid = Grid::new(1, 8, 8.0).unwrap();
        let f = Field::from_fn(grid, |x| C64::new(x[0], 0.0));
        write_slice_csv(&path, &f).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "x,re,im,abs");
        assert_eq!(lines.len(), 9);
    }
}
