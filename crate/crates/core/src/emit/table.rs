use std::fmt::Write as _;
use std::str::FromStr;

use crate::enumeration::{Endpoint, StepGrid};
use crate::error::{Error, Result};

/// CSV with header `n,word,p,q`, where `n` is the word length.
pub fn endpoints_csv<'a>(rows: impl IntoIterator<Item = &'a Endpoint>) -> String {
    let mut out = String::from("n,word,p,q\n");
    for e in rows {
        writeln!(out, "{},{},{},{}", e.word.len(), e.word, e.p, e.q).unwrap();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridFormat {
    Csv,
    Pgm,
}

impl FromStr for GridFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(GridFormat::Csv),
            "pgm" => Ok(GridFormat::Pgm),
            other => Err(Error::UnknownFormat(other.to_owned())),
        }
    }
}

/// Serializes a step grid.
///
/// CSV: header `p,q,steps` then one row per cell, `p` outer and `q` inner.
///
/// PGM: binary P5, one pixel per cell, `p` along the columns and `q`
/// increasing upward (the top row is `q = size`). Gray levels are
/// `⌊255 · steps / max⌋`.
pub fn write_step_grid(grid: &StepGrid, format: GridFormat) -> Vec<u8> {
    let n = grid.size();
    match format {
        GridFormat::Csv => {
            let mut out = String::from("p,q,steps\n");
            for p in 1..=n {
                for q in 1..=n {
                    writeln!(out, "{p},{q},{}", grid.get(p, q)).unwrap();
                }
            }
            out.into_bytes()
        }
        GridFormat::Pgm => {
            let max = u32::from(grid.max().max(1));
            let mut out = format!("P5\n{n} {n}\n255\n").into_bytes();
            out.reserve((n as usize) * (n as usize));
            for q in (1..=n).rev() {
                for p in 1..=n {
                    out.push((u32::from(grid.get(p, q)) * 255 / max) as u8);
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{endpoints_of_length, step_grid};

    #[test]
    fn csv_for_small_grid() {
        let text = String::from_utf8(write_step_grid(&step_grid(3).unwrap(), GridFormat::Csv)).unwrap();
        let expect = "p,q,steps\n1,1,1\n1,2,1\n1,3,1\n2,1,1\n2,2,1\n2,3,2\n3,1,1\n3,2,2\n3,3,1\n";
        assert_eq!(text, expect);
    }

    #[test]
    fn pgm_rescales_to_full_range() {
        let bytes = write_step_grid(&step_grid(2).unwrap(), GridFormat::Pgm);
        assert_eq!(&bytes[..11], b"P5\n2 2\n255\n");
        // every cell of the 2x2 grid takes one division
        assert_eq!(&bytes[11..], &[255, 255, 255, 255]);

        let bytes = write_step_grid(&step_grid(3).unwrap(), GridFormat::Pgm);
        let pixels = &bytes[11..];
        // top row is q = 3: (1,3) (2,3) (3,3) -> 1 2 1 steps
        assert_eq!(&pixels[..3], &[127, 255, 127]);
        assert_eq!(pixels.len(), 9);
    }

    #[test]
    fn format_names() {
        assert_eq!("csv".parse::<GridFormat>().unwrap(), GridFormat::Csv);
        assert_eq!("pgm".parse::<GridFormat>().unwrap(), GridFormat::Pgm);
        assert!("png".parse::<GridFormat>().unwrap_err().is_usage());
    }

    #[test]
    fn endpoint_rows() {
        let set = endpoints_of_length(2).unwrap();
        assert_eq!(endpoints_csv(&set.points), "n,word,p,q\n2,st,1,2\n2,t2,3,1\n");
    }
}
