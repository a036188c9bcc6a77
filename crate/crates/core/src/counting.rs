//! Exact counts of labeled graphs without isolated vertices (`d(n, q)`) and
//! of fundamental basic blocks (`f(n, l)`), plus the A054548 triangle.
//!
//! Two recurrences and one closed form are implemented independently:
//!
//! * edge-removal recurrence
//!   `q·d(n,q) = (N-q+1)·d(n,q-1) + n(n-1)·d(n-1,q-1) + N·d(n-2,q-1)`,
//!   `N = C(n,2)`, with `d(0,0) = 1`;
//! * vertex-removal recurrence for blocks
//!   `f(n+1,l) = Σ_{k=1..n} Σ_{j=0..k} C(n,j)·C(n-j,k-j)·f(n-j,l-k)`,
//!   with `f(0,0) = 1` and `f(1,l) = 0`;
//! * inclusion–exclusion over isolated vertices,
//!   `Σ_k (-1)^k C(n,k)·C(C(n-k,2), q)`.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::labeling::pair_count;

/// Largest row accepted by [`emit_triangle`] and the b-file comparison.
pub const MAX_TRIANGLE_N: u32 = 64;

/// `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountKind {
    /// Labeled graphs on `n` unisolated vertices with `q` edges.
    D,
    /// Fundamental basic blocks on `n` reducibles with nullity `l`.
    F,
}

impl FromStr for CountKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d" | "D" => Ok(CountKind::D),
            "f" | "F" => Ok(CountKind::F),
            other => Err(Error::UnsupportedFormat(format!("count kind {other}"))),
        }
    }
}

/// Rows `0..=max_n`; row `n` holds columns `0..=C(n,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    kind: CountKind,
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn build(kind: CountKind, max_n: u32) -> Self {
        match kind {
            CountKind::D => Self::d_table(max_n),
            CountKind::F => Self::f_table(max_n),
        }
    }

    fn d_table(max_n: u32) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n as usize + 1);
        for n in 0..=max_n as u64 {
            let big_n = pair_count(n as u32);
            let mut row = vec![BigUint::zero(); big_n as usize + 1];
            if n == 0 {
                row[0] = BigUint::one();
                rows.push(row);
                continue;
            }
            for q in 1..=big_n {
                let prev = |rows: &[Vec<BigUint>], m: u64| -> BigUint {
                    rows.get(m as usize)
                        .and_then(|r| r.get(q as usize - 1))
                        .cloned()
                        .unwrap_or_default()
                };
                let mut total = BigUint::from(big_n - q + 1) * &row[q as usize - 1];
                total += BigUint::from(n * (n - 1)) * prev(&rows, n - 1);
                if n >= 2 {
                    total += BigUint::from(big_n) * prev(&rows, n - 2);
                }
                let (value, rem) = (&total / q, &total % q);
                assert!(
                    rem.is_zero(),
                    "edge-removal recurrence not divisible by q at n={n}, q={q}"
                );
                row[q as usize] = value;
            }
            rows.push(row);
        }
        CountTable {
            kind: CountKind::D,
            rows,
        }
    }

    fn f_table(max_n: u32) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n as usize + 1);
        for m in 0..=max_n as u64 {
            let width = pair_count(m as u32) as usize + 1;
            let mut row = vec![BigUint::zero(); width];
            if m == 0 {
                row[0] = BigUint::one();
            }
            if m >= 2 {
                let n = m - 1;
                for (l, cell) in row.iter_mut().enumerate() {
                    let l = l as u64;
                    let mut acc = BigUint::zero();
                    for k in 1..=n.min(l) {
                        for j in 0..=k {
                            let sub = &rows[(n - j) as usize];
                            let Some(f) = sub.get((l - k) as usize) else {
                                continue;
                            };
                            if f.is_zero() {
                                continue;
                            }
                            acc += binomial(n, j) * binomial(n - j, k - j) * f;
                        }
                    }
                    *cell = acc;
                }
            }
            rows.push(row);
        }
        CountTable {
            kind: CountKind::F,
            rows,
        }
    }

    pub fn kind(&self) -> CountKind {
        self.kind
    }

    pub fn max_n(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    /// Cell `(n, q)`; zero outside the stored range.
    pub fn get(&self, n: u32, q: u64) -> BigUint {
        self.rows
            .get(n as usize)
            .and_then(|r| r.get(q as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, n: u32) -> &[BigUint] {
        &self.rows[n as usize]
    }

    /// Sum over a row: all edge subsets of `K_n` with no isolated vertex.
    pub fn row_sum(&self, n: u32) -> BigUint {
        self.rows[n as usize].iter().sum()
    }

    /// Cells in the printed band: `q` from `⌈n/2⌉` to `C(n, 2)`.
    pub fn band(&self, n: u32) -> impl Iterator<Item = (u64, &BigUint)> {
        let lo = (n as u64).div_ceil(2);
        self.rows[n as usize]
            .iter()
            .enumerate()
            .skip(lo as usize)
            .map(|(q, v)| (q as u64, v))
    }

    /// Band cells of all rows, in reading order.
    pub fn linearized(&self) -> Vec<(u32, u64, &BigUint)> {
        (0..=self.max_n())
            .flat_map(|n| self.band(n).map(move |(q, v)| (n, q, v)))
            .collect()
    }
}

/// `d(n, q)` by the edge-removal recurrence.
pub fn count_d(n: u32, q: u64) -> BigUint {
    if q > pair_count(n) {
        return BigUint::zero();
    }
    CountTable::build(CountKind::D, n).get(n, q)
}

/// `d(n, q)` by inclusion–exclusion over the set of isolated vertices.
pub fn count_d_oracle(n: u32, q: u64) -> BigUint {
    let mut acc = BigInt::zero();
    for k in 0..=n as u64 {
        let term = BigInt::from(binomial(n as u64, k) * binomial(pair_count(n - k as u32), q));
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.to_biguint()
        .expect("inclusion-exclusion count is non-negative")
}

/// `f(n, l)` by the vertex-removal recurrence.
pub fn count_f(n: u32, l: u64) -> BigUint {
    if l > pair_count(n) {
        return BigUint::zero();
    }
    CountTable::build(CountKind::F, n).get(n, l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    BFile,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "bfile" | "b-file" => Ok(TableFormat::BFile),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Rows `0..=max_n` of the triangle, columns `⌈n/2⌉..=C(n,2)`.
///
/// CSV has the header `n,q,value`. JSON is an array of row arrays with
/// integers written out in full. The b-file numbers band cells from 0 in
/// reading order.
pub fn emit_triangle(kind: CountKind, max_n: u32, format: TableFormat) -> Result<String> {
    if max_n > MAX_TRIANGLE_N {
        return Err(Error::Domain(format!(
            "max_n = {max_n} exceeds the limit {MAX_TRIANGLE_N}"
        )));
    }
    let table = CountTable::build(kind, max_n);
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str("n,q,value\n");
            for (n, q, v) in table.linearized() {
                writeln!(out, "{n},{q},{v}").unwrap();
            }
        }
        TableFormat::Json => {
            out.push('[');
            for n in 0..=max_n {
                if n > 0 {
                    out.push(',');
                }
                let cells: Vec<String> = table.band(n).map(|(_, v)| v.to_string()).collect();
                write!(out, "[{}]", cells.join(",")).unwrap();
            }
            out.push_str("]\n");
        }
        TableFormat::BFile => {
            for (index, (_, _, v)) in table.linearized().into_iter().enumerate() {
                writeln!(out, "{index} {v}").unwrap();
            }
        }
    }
    Ok(out)
}

/// One disagreeing b-file entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileMismatch {
    pub line: usize,
    pub index: u64,
    pub n: u32,
    pub q: u64,
    pub expected: BigUint,
    pub found: BigUint,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BFileReport {
    pub compared: usize,
    pub mismatches: Vec<BFileMismatch>,
    pub warnings: Vec<String>,
}

impl BFileReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares b-file text against the linearized triangle. The first index
/// in the file is aligned with cell `(0, 0)`; blank lines and `#` comments
/// are skipped.
pub fn diff_bfile_str(contents: &str, kind: CountKind) -> Result<BFileReport> {
    let mut entries = Vec::new();
    for (lineno, raw) in contents.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let parse_err = |message: String| Error::BFileParse {
            line: lineno + 1,
            message,
        };
        let (Some(index), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(parse_err(format!("expected 'index value', got '{line}'")));
        };
        let index: u64 = index
            .parse()
            .map_err(|_| parse_err(format!("bad index '{index}'")))?;
        let value: BigUint = value
            .parse()
            .map_err(|_| parse_err(format!("bad value '{value}'")))?;
        entries.push((lineno + 1, index, value));
    }

    let mut report = BFileReport::default();
    let Some(&(_, offset, _)) = entries.first() else {
        report.warnings.push("b-file has no entries".to_string());
        return Ok(report);
    };

    let positions: Vec<u64> = entries
        .iter()
        .map(|&(line, index, _)| {
            index.checked_sub(offset).ok_or(Error::BFileParse {
                line,
                message: format!("index {index} precedes the first index {offset}"),
            })
        })
        .collect::<Result<_>>()?;
    let needed = positions.iter().max().copied().unwrap_or(0) + 1;
    let mut max_n = 0u32;
    let mut cells = 1u64;
    while cells < needed && max_n < MAX_TRIANGLE_N {
        max_n += 1;
        cells += pair_count(max_n) + 1 - (max_n as u64).div_ceil(2);
    }
    let table = CountTable::build(kind, max_n);
    let linear = table.linearized();

    for ((line, index, found), pos) in entries.into_iter().zip(positions) {
        let Some(&(n, q, expected)) = linear.get(pos as usize) else {
            report.warnings.push(format!(
                "line {line}: index {index} lies beyond row {MAX_TRIANGLE_N}"
            ));
            continue;
        };
        report.compared += 1;
        if *expected != found {
            report.mismatches.push(BFileMismatch {
                line,
                index,
                n,
                q,
                expected: expected.clone(),
                found,
            });
        }
    }
    Ok(report)
}

pub fn diff_bfile(path: impl AsRef<Path>, kind: CountKind) -> Result<BFileReport> {
    let contents = std::fs::read_to_string(path)?;
    diff_bfile_str(&contents, kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 4), big(15));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(190, 95).to_string().len(), 56);
    }

    #[test]
    fn d_examples() {
        assert_eq!(count_d(0, 0), big(1));
        assert_eq!(count_d(3, 2), big(3));
        assert_eq!(count_d(4, 3), big(16));
        assert_eq!(count_d(0, 1), big(0));
        assert_eq!(count_d(3, 0), big(0));
        assert_eq!(count_d(1, 0), big(0));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(count_d_oracle(2, 1), big(1));
        assert_eq!(count_d_oracle(4, 4), big(15));
        assert_eq!(count_d_oracle(4, 1), big(0));
        assert_eq!(count_d_oracle(4, 3), big(16));
        assert_eq!(count_d_oracle(0, 0), big(1));
    }

    #[test]
    fn f_examples() {
        assert_eq!(count_f(2, 1), big(1));
        assert_eq!(count_f(4, 6), big(1));
        assert_eq!(count_f(4, 4), big(15));
        assert_eq!(count_f(1, 0), big(0));
        assert_eq!(count_f(0, 0), big(1));
    }

    #[test]
    fn recurrence_matches_oracle_to_twenty() {
        let table = CountTable::build(CountKind::D, 20);
        for n in 0..=20u32 {
            for q in 0..=pair_count(n) {
                assert_eq!(table.get(n, q), count_d_oracle(n, q), "n={n} q={q}");
            }
        }
        // exceeds 64 bits
        assert!(table.get(20, 95).bits() > 64);
    }

    #[test]
    fn row_sums_of_small_tables() {
        let d = CountTable::build(CountKind::D, 4);
        // edge subsets of K_n covering every vertex: 1, 0, 1, 4, 41
        let sums: Vec<_> = (0..=4).map(|n| d.row_sum(n)).collect();
        assert_eq!(sums, [1u64, 0, 1, 4, 41].map(big));
    }

    #[test]
    fn triangle_rows() {
        let csv = emit_triangle(CountKind::D, 4, TableFormat::Csv).unwrap();
        let row4: Vec<&str> = csv
            .lines()
            .filter(|l| l.starts_with("4,"))
            .map(|l| l.rsplit(',').next().unwrap())
            .collect();
        assert_eq!(row4, ["3", "16", "15", "6", "1"]);
        assert!(csv.starts_with("n,q,value\n0,0,1\n"));

        let dj = emit_triangle(CountKind::D, 4, TableFormat::Json).unwrap();
        let fj = emit_triangle(CountKind::F, 4, TableFormat::Json).unwrap();
        assert_eq!(dj, "[[1],[],[1],[3,1],[3,16,15,6,1]]\n");
        assert_eq!(dj, fj);

        assert_eq!(
            emit_triangle(CountKind::D, 0, TableFormat::Json).unwrap(),
            "[[1]]\n"
        );
        assert_eq!(
            emit_triangle(CountKind::D, 0, TableFormat::BFile).unwrap(),
            "0 1\n"
        );
        assert!(emit_triangle(CountKind::D, 65, TableFormat::Csv).is_err());
        assert!("xml".parse::<TableFormat>().is_err());
    }

    #[test]
    fn bfile_comparison() {
        let good = emit_triangle(CountKind::D, 5, TableFormat::BFile).unwrap();
        let report = diff_bfile_str(&good, CountKind::D).unwrap();
        assert!(report.is_clean());
        assert_eq!(report.compared, good.lines().count());

        // index 1-based, one value changed: (4, 3) sits at linear position 5
        let altered: String = good
            .lines()
            .map(|l| {
                let (i, v) = l.split_once(' ').unwrap();
                let i: u64 = i.parse().unwrap();
                let v = if i == 5 { "17" } else { v };
                format!("{} {v}\n", i + 1)
            })
            .collect();
        let report = diff_bfile_str(&altered, CountKind::D).unwrap();
        assert_eq!(report.mismatches.len(), 1);
        let m = &report.mismatches[0];
        assert_eq!((m.n, m.q, m.index), (4, 3, 6));
        assert_eq!(m.expected, big(16));

        let empty = diff_bfile_str("", CountKind::D).unwrap();
        assert!(empty.is_clean());
        assert_eq!(empty.warnings.len(), 1);

        let err = diff_bfile_str("# header\n0 1\n1 x\n", CountKind::D).unwrap_err();
        assert_eq!(
            err,
            Error::BFileParse {
                line: 3,
                message: "bad value 'x'".into()
            }
        );
    }
}
