//! Plain-text matrix files.
//!
//! ```text
//! ring: polymod 3
//! rows: 2
//! cols: 2
//! [0,1] [1,1]
//! [0,0,1] [1]
//! ```
//!
//! Integer files use `ring: int` and optionally signed decimal entries.
//! Polynomial entries list ascending coefficients and are reduced mod `p`
//! on load. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use gcdtoda_core::{BigInt, DenseMatrix, PolyModP};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the file ends early.
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixFile {
    Int(DenseMatrix<BigInt>),
    PolyMod { modulus: u32, matrix: DenseMatrix<PolyModP> },
}

impl MatrixFile {
    pub fn rows(&self) -> usize {
        match self {
            MatrixFile::Int(m) => m.rows(),
            MatrixFile::PolyMod { matrix, .. } => matrix.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            MatrixFile::Int(m) => m.cols(),
            MatrixFile::PolyMod { matrix, .. } => matrix.cols(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let mut header = |key: &str| -> Result<(usize, String), ParseError> {
            let Some((n, line)) = lines.next() else {
                return fail(0, format!("missing `{key}:` header"));
            };
            match line.split_once(':') {
                Some((k, v)) if k.trim() == key => Ok((n, v.trim().to_string())),
                _ => fail(n, format!("expected `{key}:` header, found {line:?}")),
            }
        };

        let (ring_line, ring) = header("ring")?;
        let modulus = match ring.split_whitespace().collect::<Vec<_>>()[..] {
            ["int"] => None,
            ["polymod", p] => {
                let p: u64 = p.parse().or_else(|_| fail(ring_line, format!("bad modulus {p:?}")))?;
                if PolyModP::check_modulus(p).is_err() {
                    return fail(ring_line, format!("modulus {p} is not a prime below 65536"));
                }
                Some(p as u32)
            }
            _ => return fail(ring_line, format!("unknown ring {ring:?}; use `int` or `polymod <p>`")),
        };
        let mut dim = |key: &str| -> Result<usize, ParseError> {
            let (n, v) = header(key)?;
            match v.parse::<usize>() {
                Ok(d) if d > 0 => Ok(d),
                _ => fail(n, format!("`{key}` must be a positive integer, found {v:?}")),
            }
        };
        let rows = dim("rows")?;
        let cols = dim("cols")?;

        let mut tokens: Vec<Vec<(usize, String)>> = Vec::with_capacity(rows);
        for (n, line) in lines {
            if tokens.len() == rows {
                return fail(n, format!("more than {rows} matrix rows"));
            }
            let row = tokenize(line).or_else(|msg| fail(n, msg))?;
            if row.len() != cols {
                return fail(n, format!("expected {cols} entries, found {}", row.len()));
            }
            tokens.push(row.into_iter().map(|t| (n, t)).collect());
        }
        if tokens.len() < rows {
            return fail(0, format!("expected {rows} matrix rows, found {}", tokens.len()));
        }
        let entries = tokens.into_iter().flatten();
        match modulus {
            None => {
                let data = entries
                    .map(|(n, t)| parse_int(&t).or_else(|msg| fail(n, msg)))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(MatrixFile::Int(DenseMatrix::new(rows, cols, data).expect("shape checked")))
            }
            Some(p) => {
                let data = entries
                    .map(|(n, t)| parse_poly(&t, p).or_else(|msg| fail(n, msg)))
                    .collect::<Result<Vec<_>, _>>()?;
                let matrix = DenseMatrix::new(rows, cols, data).expect("shape checked");
                Ok(MatrixFile::PolyMod { modulus: p, matrix })
            }
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        match self {
            MatrixFile::Int(m) => {
                writeln!(out, "ring: int").unwrap();
                write_body(&mut out, m);
            }
            MatrixFile::PolyMod { modulus, matrix } => {
                writeln!(out, "ring: polymod {modulus}").unwrap();
                write_body(&mut out, matrix);
            }
        }
        out
    }
}

impl FromStr for MatrixFile {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::parse(s)
    }
}

fn write_body<R: std::fmt::Display + gcdtoda_core::Pid>(out: &mut String, m: &DenseMatrix<R>) {
    writeln!(out, "rows: {}\ncols: {}", m.rows(), m.cols()).unwrap();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
}

// Whitespace-separated, except that a bracketed entry may contain spaces.
fn tokenize(line: &str) -> Result<Vec<String>, String> {
    let mut tokens = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut token = String::new();
        if c == '[' {
            loop {
                match chars.next() {
                    Some(']') => {
                        token.push(']');
                        break;
                    }
                    Some(ch) if !ch.is_whitespace() => token.push(ch),
                    Some(_) => {}
                    None => return Err(format!("unclosed bracket in {token:?}")),
                }
            }
        } else {
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() {
                    break;
                }
                token.push(ch);
                chars.next();
            }
        }
        tokens.push(token);
    }
    Ok(tokens)
}

fn parse_int(token: &str) -> Result<BigInt, String> {
    let digits = token.strip_prefix(['+', '-']).unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("bad integer entry {token:?}"));
    }
    let value: BigInt = digits.parse().expect("decimal digits");
    Ok(if token.starts_with('-') { -value } else { value })
}

fn parse_poly(token: &str, p: u32) -> Result<PolyModP, String> {
    let inner = token
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("bad polynomial entry {token:?}; expected `[c0,c1,…]`"))?;
    let modulus = BigInt::from(p);
    let mut residues = Vec::new();
    if !inner.is_empty() {
        for c in inner.split(',') {
            let c = parse_int(c).map_err(|_| format!("bad coefficient {c:?} in {token:?}"))?;
            let r = ((c % &modulus) + &modulus) % &modulus;
            residues.push(i64::try_from(r).expect("residue below modulus"));
        }
    }
    Ok(PolyModP::new(p, &residues).expect("modulus checked"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gcdtoda_core::Pid;
    use proptest::prelude::*;

    #[test]
    fn parses_integer_file() {
        let f = MatrixFile::parse("ring: int\nrows: 2\ncols: 2\n# comment\n-3 +4\n0 12345678901234567890\n").unwrap();
        let MatrixFile::Int(m) = &f else { panic!("expected integers") };
        assert_eq!(m.get(0, 0), &BigInt::from(-3));
        assert_eq!(m.get(0, 1), &BigInt::from(4));
        assert_eq!(m.get(1, 1).to_string(), "12345678901234567890");
    }

    #[test]
    fn reduces_polynomial_coefficients() {
        let f = MatrixFile::parse("ring: polymod 3\nrows: 1\ncols: 3\n[4, -1, 3] [] [0,0]\n").unwrap();
        let MatrixFile::PolyMod { modulus: 3, matrix } = &f else { panic!("expected polynomials") };
        assert_eq!(matrix.get(0, 0), &PolyModP::new(3, &[1, 2]).unwrap());
        assert!(matrix.get(0, 1).is_zero());
        assert!(matrix.get(0, 2).is_zero());
    }

    fn error_line(text: &str) -> usize {
        MatrixFile::parse(text).unwrap_err().line
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(error_line("ring: rational\nrows: 1\ncols: 1\n1\n"), 1);
        assert_eq!(error_line("ring: polymod 4\nrows: 1\ncols: 1\n[1]\n"), 1);
        assert_eq!(error_line("ring: int\ncols: 1\n"), 2);
        assert_eq!(error_line("ring: int\nrows: 0\ncols: 1\n"), 2);
        assert_eq!(error_line("ring: int\nrows: 2\ncols: 2\n1 2\n\n3 x\n"), 6);
        assert_eq!(error_line("ring: int\nrows: 1\ncols: 2\n1 2 3\n"), 4);
        assert_eq!(error_line("ring: int\nrows: 1\ncols: 1\n1\n2\n"), 5);
        assert_eq!(error_line("ring: polymod 2\nrows: 1\ncols: 1\n[1,\n"), 4);
        assert_eq!(error_line("ring: polymod 2\nrows: 1\ncols: 1\n5\n"), 4);
        assert_eq!(error_line("ring: int\nrows: 2\ncols: 1\n1\n"), 0);
    }

    #[test]
    fn renders_polynomials_in_entry_syntax() {
        let text = "ring: polymod 5\nrows: 1\ncols: 2\n[0] [1,0,3]\n";
        assert_eq!(MatrixFile::parse(text).unwrap().render(), text);
    }

    fn int_file() -> impl Strategy<Value = MatrixFile> {
        (1usize..5, 1usize..5).prop_flat_map(|(m, n)| {
            prop::collection::vec(any::<i64>(), m * n).prop_map(move |v| {
                MatrixFile::Int(DenseMatrix::new(m, n, v.into_iter().map(BigInt::from).collect()).unwrap())
            })
        })
    }

    fn poly_file() -> impl Strategy<Value = MatrixFile> {
        (prop::sample::select(vec![2u32, 3, 5, 65521]), 1usize..4, 1usize..4).prop_flat_map(|(p, m, n)| {
            prop::collection::vec(prop::collection::vec(0i64..p as i64, 0..5), m * n).prop_map(move |v| {
                let data = v.iter().map(|c| PolyModP::new(p, c).unwrap()).collect();
                MatrixFile::PolyMod { modulus: p, matrix: DenseMatrix::new(m, n, data).unwrap() }
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(f in prop_oneof![int_file(), poly_file()]) {
            prop_assert_eq!(MatrixFile::parse(&f.render()).unwrap(), f);
        }
    }
}
