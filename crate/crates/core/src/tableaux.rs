//! Young diagrams, skew shapes, and Littlewood-Richardson coefficients.
//!
//! The coefficient `c(outer; inner, content)` counts fillings of the skew
//! shape outer∖inner in which the integer `i` occurs `content_i` times,
//! subject to the full classical rule:
//!
//! 1. rows weakly increase left to right,
//! 2. columns strictly increase top to bottom,
//! 3. the reading word — rows top to bottom, each row right to left — is a
//!    lattice word: every prefix contains at least as many `i` as `i+1`.
//!
//! Dropping either of the last two conditions breaks the count's symmetry in
//! (inner, content) and its agreement with Schur-polynomial products, so all
//! three are enforced; the test suite pins this against independent oracles.
//!
//! Enumeration is depth-first over boxes in reading order, pruning on row,
//! column, content and lattice violations as early as possible; desk-scale
//! coefficients finish in microseconds.

use std::fmt;

use crate::partition::Partition;

/// Errors from skew-shape and filling construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableauxError {
    /// The inner shape does not fit inside the outer shape.
    InnerNotContained,
    /// Content weight differs from the number of skew boxes.
    ContentSizeMismatch { boxes: u64, content: u64 },
    /// A filling's row lengths do not match the skew shape.
    ShapeMismatch,
    /// A row decreases somewhere (1-based row index).
    RowNotWeaklyIncreasing { row: usize },
    /// A column fails to strictly increase (1-based row, column).
    ColumnNotStrictlyIncreasing { row: usize, col: usize },
    /// The reading word stops being a lattice word at this 1-based position.
    NotLatticeWord { position: usize },
    /// Fillings use positive entries only.
    ZeroEntry,
}

impl fmt::Display for TableauxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauxError::InnerNotContained => {
                write!(f, "inner shape does not fit inside the outer shape")
            }
            TableauxError::ContentSizeMismatch { boxes, content } => {
                write!(f, "content weight {content} does not fill {boxes} skew boxes")
            }
            TableauxError::ShapeMismatch => write!(f, "row lengths do not match the skew shape"),
            TableauxError::RowNotWeaklyIncreasing { row } => {
                write!(f, "row {row} is not weakly increasing")
            }
            TableauxError::ColumnNotStrictlyIncreasing { row, col } => {
                write!(f, "column {col} is not strictly increasing at row {row}")
            }
            TableauxError::NotLatticeWord { position } => {
                write!(f, "reading word violates the lattice property at position {position}")
            }
            TableauxError::ZeroEntry => write!(f, "filling entries must be positive"),
        }
    }
}

impl std::error::Error for TableauxError {}

/// A left-justified array of boxes with non-increasing row lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungDiagram {
    shape: Partition,
}

impl YoungDiagram {
    pub fn new(shape: Partition) -> YoungDiagram {
        YoungDiagram { shape }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of boxes.
    pub fn boxes(&self) -> u64 {
        self.shape.weight()
    }

    pub fn rows(&self) -> usize {
        self.shape.len()
    }
}

/// The boxes of `outer` not in `inner`; `inner` must fit inside `outer`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape, TableauxError> {
        if !outer.contains(&inner) {
            return Err(TableauxError::InnerNotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of skew boxes.
    pub fn boxes(&self) -> u64 {
        self.outer.weight() - self.inner.weight()
    }

    /// Row widths: row `i` holds `outer_i - inner_i` boxes, starting at
    /// absolute column `inner_i`.
    fn row_spans(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .map(|i| (self.inner.part(i) as usize, self.outer.part(i) as usize))
            .collect()
    }
}

/// A filling of a skew shape satisfying the three conditions above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRFilling {
    skew: SkewShape,
    /// Entries per row, left to right; row `i` has `outer_i - inner_i` entries.
    rows: Vec<Vec<u32>>,
}

impl LRFilling {
    /// Validates all three conditions, reporting the first failure.
    pub fn new(skew: SkewShape, rows: Vec<Vec<u32>>) -> Result<LRFilling, TableauxError> {
        let spans = skew.row_spans();
        if rows.len() != spans.len()
            || rows.iter().zip(&spans).any(|(r, &(lo, hi))| r.len() != hi - lo)
        {
            return Err(TableauxError::ShapeMismatch);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(TableauxError::ZeroEntry);
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(TableauxError::RowNotWeaklyIncreasing { row: i + 1 });
            }
        }
        for i in 1..rows.len() {
            let (lo, hi) = spans[i];
            for c in lo..hi {
                let (plo, phi) = spans[i - 1];
                if c >= plo && c < phi && rows[i][c - lo] <= rows[i - 1][c - plo] {
                    return Err(TableauxError::ColumnNotStrictlyIncreasing {
                        row: i + 1,
                        col: c + 1,
                    });
                }
            }
        }
        let filling = LRFilling { skew, rows };
        let word = filling.reading_word();
        let mut counts: Vec<u64> = Vec::new();
        for (pos, &v) in word.iter().enumerate() {
            let v = v as usize;
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
            if v >= 2 && counts[v - 1] > counts[v - 2] {
                return Err(TableauxError::NotLatticeWord { position: pos + 1 });
            }
        }
        Ok(filling)
    }

    pub fn skew(&self) -> &SkewShape {
        &self.skew
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entries read top row to bottom row, each row right to left.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }
}

impl fmt::Display for LRFilling {
    /// Rows of integers; inner boxes render as dots to show the offset.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spans = self.skew.row_spans();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut cells: Vec<String> = vec![".".to_string(); spans[i].0];
            cells.extend(row.iter().map(|e| e.to_string()));
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// All valid fillings of `skew` with the given content, in depth-first
/// reading order. Errors if the content weight does not match the box count.
pub fn enumerate_lr_fillings(
    skew: &SkewShape,
    content: &Partition,
) -> Result<Vec<LRFilling>, TableauxError> {
    if skew.boxes() != content.weight() {
        return Err(TableauxError::ContentSizeMismatch {
            boxes: skew.boxes(),
            content: content.weight(),
        });
    }
    let mut out = Vec::new();
    search_fillings(skew, content, &mut |rows| {
        out.push(LRFilling { skew: skew.clone(), rows: rows.to_vec() })
    });
    Ok(out)
}

/// The coefficient `c(outer; inner, content)`: the number of valid fillings.
/// Incompatible shapes (weight mismatch or inner ⊄ outer) give 0.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if inner.weight() + content.weight() != outer.weight() || !outer.contains(inner) {
        return 0;
    }
    let skew = SkewShape::new(outer.clone(), inner.clone()).expect("containment checked");
    let mut count = 0u64;
    search_fillings(&skew, content, &mut |_| count += 1);
    count
}

/// Depth-first fill in reading order (top row right-to-left, then the next
/// row), invoking `emit` with the completed rows. Pruning per box:
/// row weak increase, column strict increase, content capacity, and the
/// lattice-prefix inequality.
fn search_fillings(skew: &SkewShape, content: &Partition, emit: &mut impl FnMut(&[Vec<u32>])) {
    let spans = skew.row_spans();
    let values = content.len();
    let capacity: Vec<u64> = (0..values).map(|i| content.part(i)).collect();
    let mut rows: Vec<Vec<u32>> = spans.iter().map(|&(lo, hi)| vec![0; hi - lo]).collect();
    let mut counts = vec![0u64; values];

    // Boxes in reading order as (row, offset-within-row).
    let order: Vec<(usize, usize)> = spans
        .iter()
        .enumerate()
        .flat_map(|(r, &(lo, hi))| (0..hi - lo).rev().map(move |o| (r, o)))
        .collect();

    fn recurse(
        step: usize,
        order: &[(usize, usize)],
        spans: &[(usize, usize)],
        capacity: &[u64],
        rows: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u64>,
        emit: &mut impl FnMut(&[Vec<u32>]),
    ) {
        if step == order.len() {
            emit(rows);
            return;
        }
        let (r, o) = order[step];
        let (lo, hi) = spans[r];
        // Upper bound from the right neighbour (already placed).
        let right_cap = if o + 1 < hi - lo { rows[r][o + 1] } else { u32::MAX };
        // Lower bound from the box directly above, when it is a skew box.
        let col = lo + o;
        let above = if r > 0 {
            let (plo, phi) = spans[r - 1];
            if col >= plo && col < phi {
                rows[r - 1][col - plo]
            } else {
                0
            }
        } else {
            0
        };
        for v in (above + 1)..=right_cap.min(capacity.len() as u32) {
            let vi = v as usize - 1;
            if counts[vi] >= capacity[vi] {
                continue;
            }
            if vi > 0 && counts[vi] + 1 > counts[vi - 1] {
                continue; // lattice prefix would fail
            }
            rows[r][o] = v;
            counts[vi] += 1;
            recurse(step + 1, order, spans, capacity, rows, counts, emit);
            counts[vi] -= 1;
            rows[r][o] = 0;
        }
    }

    recurse(0, &order, &spans, &capacity, &mut rows, &mut counts, emit);
}
