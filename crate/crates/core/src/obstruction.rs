//! Integer obstruction systems in bracket-label notation and the existence
//! verdicts for equivariant maps `F(R^d, n) → S(W_n^{⊕(d-1)})`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};
use crate::linalg::{solve_integer, Int, Solution, SparseIntMatrix};

/// How bracket labels are identified with variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelMode {
    /// Digits sorted inside blocks, blocks ordered by their minimum.
    Canonical,
    /// The label string as written.
    Strict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSystem {
    pub labels: Vec<String>,
    pub matrix: SparseIntMatrix,
    pub rhs: Vec<Int>,
    pub mode: LabelMode,
}

impl IntegerSystem {
    pub fn new(labels: Vec<String>, matrix: SparseIntMatrix, rhs: Vec<Int>, mode: LabelMode) -> Result<Self> {
        if matrix.cols() != labels.len() || matrix.rows() != rhs.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels and {} right-hand sides for a {}x{} matrix",
                labels.len(),
                rhs.len(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(*l)) {
            return Err(Error::Structural(format!("duplicate label {dup}")));
        }
        Ok(IntegerSystem {
            labels,
            matrix,
            rhs,
            mode,
        })
    }

    pub fn equations(&self) -> usize {
        self.matrix.rows()
    }

    pub fn variables(&self) -> usize {
        self.matrix.cols()
    }

    /// Sum of coefficients in each row.
    pub fn row_masses(&self) -> Vec<Int> {
        let mut out = vec![Int::ZERO; self.equations()];
        for (i, _, v) in self.matrix.entries() {
            out[*i] = &out[*i] + v;
        }
        out
    }

    pub fn to_document(&self) -> SystemDocument {
        let dense = self.matrix.to_dense();
        SystemDocument {
            labels: self.labels.clone(),
            rows: dense,
            rhs: self.rhs.clone(),
        }
    }

    pub fn from_document(doc: SystemDocument, mode: LabelMode) -> Result<Self> {
        let cols = doc.labels.len();
        if let Some(row) = doc.rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row with {} coefficients for {cols} labels",
                row.len()
            )));
        }
        let matrix = SparseIntMatrix::from_dense_int(doc.rows.len(), cols, &doc.rows);
        IntegerSystem::new(doc.labels, matrix, doc.rhs, mode)
    }
}

/// `labels`, one dense coefficient row per equation, and right-hand sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDocument {
    pub labels: Vec<String>,
    pub rows: Vec<Vec<Int>>,
    pub rhs: Vec<Int>,
}

/// One equation per line, `c*x_[label]` terms joined by `+`/`-`.
impl fmt::Display for IntegerSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.matrix.row_lists().iter().enumerate() {
            let mut first = true;
            for (j, v) in row {
                let neg = v.is_negative();
                let mag = v.abs();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, " {} ", if neg { '-' } else { '+' })?;
                }
                first = false;
                if mag != Int::ONE {
                    write!(f, "{mag}*")?;
                }
                write!(f, "x_{}", self.labels[*j])?;
            }
            if first {
                write!(f, "0")?;
            }
            writeln!(f, " = {}", self.rhs[i])?;
        }
        Ok(())
    }
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Validates a bracket label and returns it in the requested form.
pub fn normalize_label(raw: &str, mode: LabelMode) -> std::result::Result<String, String> {
    let inner = raw
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| format!("label `{raw}` must be enclosed in brackets"))?;
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for part in inner.split('|') {
        if part.is_empty() {
            return Err(format!("empty block in `{raw}`"));
        }
        let mut block = Vec::new();
        for c in part.chars() {
            let d = c
                .to_digit(10)
                .filter(|&d| d > 0)
                .ok_or_else(|| format!("unexpected `{c}` in `{raw}`"))?;
            block.push(d);
        }
        blocks.push(block);
    }
    let mut all: Vec<u32> = blocks.iter().flatten().copied().collect();
    all.sort_unstable();
    let n = all.len() as u32;
    if all != (1..=n).collect::<Vec<_>>() {
        return Err(format!("`{raw}` is not a partition of 1..{n}"));
    }
    match mode {
        LabelMode::Strict => Ok(raw.to_string()),
        LabelMode::Canonical => {
            for b in &mut blocks {
                b.sort_unstable();
            }
            blocks.sort_by_key(|b| b[0]);
            let body: Vec<String> = blocks
                .iter()
                .map(|b| b.iter().map(|d| d.to_string()).collect())
                .collect();
            Ok(format!("[{}]", body.join("|")))
        }
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    text: &'a str,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> Error {
        perr(self.line, self.column(), message)
    }

    fn integer(&mut self) -> Option<Int> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        s.parse().ok()
    }

    fn rest_is_blank(&self) -> bool {
        self.text[self.chars.get(self.pos).map_or(self.text.len(), |c| c.0)..]
            .trim()
            .is_empty()
    }
}

/// Parses equations of `x_[label]` terms (optionally `c*x_[label]`,
/// `x_{[label]}`), joined by `+` or `-`, ending in `= c`. A line ending in
/// `+` or `-` continues on the next. Blank lines and `#` comments are skipped.
pub fn parse_bracket_system(text: &str, mode: LabelMode) -> Result<IntegerSystem> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut rows: Vec<BTreeMap<usize, Int>> = Vec::new();
    let mut rhs = Vec::new();
    let mut current: BTreeMap<usize, Int> = BTreeMap::new();
    let mut open = false;
    let mut last_line = 0;

    for (ln, raw_line) in text.lines().enumerate() {
        let line_no = ln + 1;
        last_line = line_no;
        let body = raw_line.split('#').next().unwrap_or("");
        let mut cur = Cursor {
            chars: body.char_indices().collect(),
            pos: 0,
            line: line_no,
            text: body,
        };
        cur.skip_ws();
        if cur.peek().is_none() {
            if open {
                return Err(cur.err("equation continues into a blank line"));
            }
            continue;
        }
        let mut sign = Int::ONE;
        let mut expect_term = true;
        if !open && cur.peek() == Some('-') {
            sign = Int::from(-1);
            cur.pos += 1;
        }
        loop {
            cur.skip_ws();
            if expect_term {
                let Some(c) = cur.peek() else {
                    // dangling operator: continue on the next line
                    open = true;
                    break;
                };
                if c == '=' && current.is_empty() && !open {
                    return Err(cur.err("equation has no terms"));
                }
                let mult = match cur.integer() {
                    Some(m) => {
                        cur.skip_ws();
                        if cur.peek() == Some('*') {
                            cur.pos += 1;
                            cur.skip_ws();
                        }
                        m
                    }
                    None => Int::ONE,
                };
                let start = cur.column();
                if !(cur.peek() == Some('x') && cur.chars.get(cur.pos + 1).map(|c| c.1) == Some('_')) {
                    return Err(cur.err("expected a term `x_[...]`"));
                }
                cur.pos += 2;
                let braced = cur.peek() == Some('{');
                if braced {
                    cur.pos += 1;
                }
                let label_start = cur.pos;
                while cur.peek().is_some_and(|c| c != ']') {
                    cur.pos += 1;
                }
                if cur.peek() != Some(']') {
                    return Err(perr(line_no, start, "unterminated label"));
                }
                cur.pos += 1;
                let raw: String = cur.chars[label_start..cur.pos].iter().map(|c| c.1).collect();
                if braced {
                    if cur.peek() != Some('}') {
                        return Err(cur.err("expected `}` after the label"));
                    }
                    cur.pos += 1;
                }
                let label = normalize_label(&raw, mode).map_err(|m| perr(line_no, start, m))?;
                let col = *index.entry(label.clone()).or_insert_with(|| {
                    labels.push(label);
                    labels.len() - 1
                });
                let slot = current.entry(col).or_insert(Int::ZERO);
                *slot = &*slot + &(&sign * &mult);
                expect_term = false;
                open = true;
            } else {
                match cur.peek() {
                    Some('+') => {
                        sign = Int::ONE;
                        cur.pos += 1;
                        expect_term = true;
                    }
                    Some('-') => {
                        sign = Int::from(-1);
                        cur.pos += 1;
                        expect_term = true;
                    }
                    Some('=') => {
                        cur.pos += 1;
                        cur.skip_ws();
                        let neg = cur.peek() == Some('-');
                        if neg {
                            cur.pos += 1;
                        }
                        let value = cur.integer().ok_or_else(|| cur.err("right-hand side must be an integer"))?;
                        cur.skip_ws();
                        if cur.peek() == Some('.') {
                            cur.pos += 1;
                        }
                        if !cur.rest_is_blank() {
                            return Err(cur.err("unexpected text after the right-hand side"));
                        }
                        rhs.push(if neg { -value } else { value });
                        rows.push(std::mem::take(&mut current));
                        open = false;
                        break;
                    }
                    None => {
                        return Err(cur.err("expected `+`, `-` or `= c` at the end of the line"));
                    }
                    Some(c) => return Err(cur.err(format!("unexpected `{c}`"))),
                }
            }
        }
    }
    if open {
        return Err(perr(last_line.max(1), 1, "last equation has no right-hand side"));
    }
    let triplets = rows
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().map(move |(&j, v)| (i, j, v.clone())));
    let matrix = SparseIntMatrix::from_triplets(rows.len(), labels.len(), triplets)?;
    IntegerSystem::new(labels, matrix, rhs, mode)
}

/// The six equations for `n = 4`, as printed.
pub const N4_SYSTEM: &str = "\
x_[1|234] + x_[1|342] + x_[1|243] + x_[1|234] + x_[12|34] + x_[13|24] + x_[14|23] +
x_[14|23] + x_[13|24] + x_[12|34] + x_[123|4] + x_[124|3] + x_[134|2] + x_[123|4] = 1
x_[1|243] + x_[1|432] + x_[1|243] + x_[1|234] + x_[12|43] + x_[13|24] + x_[14|23] +
x_[14|23] + x_[13|24] + x_[12|43] + x_[123|4] + x_[124|3] + x_[143|2] + x_[124|3] = 1
x_[1|324] + x_[1|342] + x_[1|243] + x_[1|324] + x_[12|34] + x_[13|24] + x_[14|32] +
x_[14|32] + x_[13|24] + x_[12|34] + x_[132|4] + x_[124|3] + x_[134|2] + x_[132|4] = 1
x_[1|342] + x_[1|342] + x_[1|423] + x_[1|324] + x_[12|34] + x_[13|42] + x_[14|32] +
x_[14|32] + x_[13|42] + x_[12|34] + x_[132|4] + x_[142|3] + x_[134|2] + x_[134|2] = 1
x_[1|423] + x_[1|432] + x_[1|423] + x_[1|234] + x_[12|43] + x_[13|42] + x_[14|23] +
x_[14|23] + x_[13|42] + x_[12|43] + x_[123|4] + x_[142|3] + x_[143|2] + x_[142|3] = 1
x_[1|432] + x_[1|432] + x_[1|423] + x_[1|324] + x_[12|43] + x_[13|42] + x_[14|32] +
x_[14|32] + x_[13|42] + x_[12|43] + x_[132|4] + x_[142|3] + x_[143|2] + x_[143|2] = 1
";

/// Built-in systems by name. Labels are kept as printed.
pub fn builtin_system(name: &str) -> Result<IntegerSystem> {
    builtin_system_with(name, LabelMode::Strict)
}

pub fn builtin_system_with(name: &str, mode: LabelMode) -> Result<IntegerSystem> {
    match name {
        "n4" => parse_bracket_system(N4_SYSTEM, mode),
        other => Err(Error::InvalidArgument(format!("unknown built-in system `{other}`"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemVerdict {
    pub mode: LabelMode,
    pub equations: usize,
    pub variables: usize,
    pub solution: Solution,
}

impl SystemVerdict {
    pub fn solvable(&self) -> bool {
        self.solution.is_solvable()
    }
}

/// Integer solvability with a re-verified witness or certificate.
pub fn integer_solvable(sys: &IntegerSystem) -> Result<SystemVerdict> {
    let solution = solve_integer(&sys.matrix, &sys.rhs)?;
    match &solution {
        Solution::Solvable { x } => {
            if sys.matrix.mul_vec(x)? != sys.rhs {
                return Err(Error::Structural("witness failed verification".into()));
            }
        }
        Solution::Unsolvable { certificate } => {
            if !certificate.verify(&sys.matrix, &sys.rhs) {
                return Err(Error::Structural("certificate failed verification".into()));
            }
        }
    }
    Ok(SystemVerdict {
        mode: sys.mode,
        equations: sys.equations(),
        variables: sys.variables(),
        solution,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Cyclic,
    Symmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rationale {
    Prime,
    PrimePower,
    SolvableSystem,
    TheoremCitation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceVerdict {
    pub n: u64,
    pub group: GroupKind,
    pub exists: bool,
    pub rationale: Rationale,
}

/// `Z/n`-maps exist exactly when `n` is not prime.
pub fn zn_map_exists(n: u64) -> Result<ExistenceVerdict> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n ≥ 2, got {n}")));
    }
    let exists = !is_prime(n);
    let rationale = if !exists {
        Rationale::Prime
    } else if n == 4 && integer_solvable(&builtin_system("n4")?)?.solvable() {
        Rationale::SolvableSystem
    } else {
        Rationale::TheoremCitation
    };
    Ok(ExistenceVerdict {
        n,
        group: GroupKind::Cyclic,
        exists,
        rationale,
    })
}

/// `Sym_n`-maps exist exactly when `n` is not a prime power.
pub fn symn_map_exists(n: u64) -> Result<ExistenceVerdict> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n ≥ 2, got {n}")));
    }
    let pp = prime_power(n).is_some();
    Ok(ExistenceVerdict {
        n,
        group: GroupKind::Symmetric,
        exists: !pp,
        rationale: if pp {
            Rationale::PrimePower
        } else {
            Rationale::TheoremCitation
        },
    })
}
