//! Partitions inside rectangular boards.
//!
//! Rows are numbered `1..=n` from the top, columns `1..=m` from the left, and
//! the partition occupies the top-left corner of the `n x m` board.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition together with the `rows x cols` board that contains it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoardShape {
    parts: Vec<usize>,
    rows: usize,
    cols: usize,
}

/// A cell of a board, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellRef {
    pub row: usize,
    pub col: usize,
}

impl CellRef {
    pub fn new(row: usize, col: usize) -> Self {
        CellRef { row, col }
    }
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl BoardShape {
    /// Validates that `parts` is weakly decreasing and fits `rows x cols`.
    /// Zero parts are trimmed.
    pub fn new(parts: Vec<usize>, rows: usize, cols: usize) -> Result<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.len() > rows || parts.first().is_some_and(|&p| p > cols) {
            return Err(Error::InvalidArgument(format!(
                "shape {parts:?} does not fit a {rows}x{cols} board"
            )));
        }
        Ok(BoardShape { parts, rows, cols })
    }

    pub fn empty(rows: usize, cols: usize) -> Self {
        BoardShape {
            parts: Vec::new(),
            rows,
            cols,
        }
    }

    /// The rectangle `width^height` on the given board.
    pub fn rectangle(width: usize, height: usize, rows: usize, cols: usize) -> Result<Self> {
        Self::new(vec![width; height], rows, cols)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of board rows (`n`).
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of board columns (`m`).
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-based), zero past the last part.
    pub fn row_len(&self, r: usize) -> usize {
        r.checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Length of column `c` (1-based), i.e. the conjugate part.
    pub fn col_len(&self, c: usize) -> usize {
        if c == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    pub fn first_part(&self) -> usize {
        self.row_len(1)
    }

    pub fn contains(&self, cell: CellRef) -> bool {
        cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn cells(&self) -> impl Iterator<Item = CellRef> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |c| CellRef::new(i + 1, c)))
    }

    /// Corner cells `(r, λ_r)` with `λ_r > λ_(r+1)`.
    pub fn corners(&self) -> Vec<CellRef> {
        (1..=self.length())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| CellRef::new(r, self.row_len(r)))
            .collect()
    }

    /// Same partition on a different board.
    pub fn with_board(&self, rows: usize, cols: usize) -> Result<Self> {
        Self::new(self.parts.clone(), rows, cols)
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn board_label(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    pub fn parts_label(&self) -> String {
        if self.parts.is_empty() {
            "0".to_string()
        } else {
            self.parts
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for BoardShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) in {}", self.parts_label(), self.board_label())
    }
}

/// Parses `2,1` or `(2,1)` (or `0` / empty for the empty shape).
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad shape `{s}`")))
        })
        .collect()
}

/// Parses `NxM` into `(rows, cols)`.
pub fn parse_board(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad board `{s}`, expected NxM"));
    let (n, m) = s.trim().split_once(['x', 'X']).ok_or_else(bad)?;
    Ok((
        n.trim().parse().map_err(|_| bad())?,
        m.trim().parse().map_err(|_| bad())?,
    ))
}

pub fn parse_shape(shape: &str, board: &str) -> Result<BoardShape> {
    let (rows, cols) = parse_board(board)?;
    BoardShape::new(parse_parts(shape)?, rows, cols)
}

/// Transposed partition on the transposed board.
pub fn conjugate(s: &BoardShape) -> BoardShape {
    let parts = (1..=s.first_part()).map(|c| s.col_len(c)).collect();
    BoardShape {
        parts,
        rows: s.cols,
        cols: s.rows,
    }
}

/// Removes column `j`; the board loses a column.
pub fn delete_column(s: &BoardShape, j: usize) -> Result<BoardShape> {
    if j == 0 || j > s.cols {
        return Err(Error::InvalidArgument(format!(
            "column {j} outside {}",
            s.board_label()
        )));
    }
    let parts = s
        .parts
        .iter()
        .map(|&p| if p >= j { p - 1 } else { p })
        .collect();
    BoardShape::new(parts, s.rows, s.cols - 1)
}

/// Removes row `r`; the board loses a row.
pub fn delete_row(s: &BoardShape, r: usize) -> Result<BoardShape> {
    if r == 0 || r > s.rows {
        return Err(Error::InvalidArgument(format!(
            "row {r} outside {}",
            s.board_label()
        )));
    }
    let mut parts = s.parts.clone();
    if r <= parts.len() {
        parts.remove(r - 1);
    }
    BoardShape::new(parts, s.rows - 1, s.cols)
}

/// Removes the row and the column through a cell of the shape.
pub fn contract_cell(s: &BoardShape, i: usize, j: usize) -> Result<BoardShape> {
    if !s.contains(CellRef::new(i, j)) {
        return Err(Error::InvalidArgument(format!("cell ({i},{j}) not in {s}")));
    }
    delete_column(&delete_row(s, i)?, j)
}

/// Deletion `λ \ e` (same board) and contraction `λ / e` (board shrinks by a
/// row and a column) at a corner `e`.
pub fn corner_ops(s: &BoardShape, e: CellRef) -> Result<(BoardShape, BoardShape)> {
    if !s.corners().contains(&e) {
        return Err(Error::InvalidArgument(format!(
            "{e} is not a corner of {s}"
        )));
    }
    let mut parts = s.parts.clone();
    parts[e.row - 1] -= 1;
    let deleted = BoardShape::new(parts, s.rows, s.cols)?;
    let contracted = contract_cell(s, e.row, e.col)?;
    Ok((deleted, contracted))
}

/// The abelian Dyck path `N^m w(λ) E^n` from `(0,0)` to `(m+n, m+n)` as a
/// word in `'N'` and `'E'`, where `w(λ)` traces the lower-right boundary of
/// `λ` through the `m`-wide, `n`-tall block in the top-left of the staircase.
pub fn dyck_word(s: &BoardShape) -> String {
    let (m, total) = (s.cols, s.rows + s.cols);
    let mut word = "N".repeat(m);
    let mut height = m;
    for c in 1..=m {
        let h = total - s.col_len(c);
        word.push_str(&"N".repeat(h - height));
        height = h;
        word.push('E');
    }
    word.push_str(&"N".repeat(total - height));
    word.push_str(&"E".repeat(s.rows));
    word
}

/// Cells `(i, j)`, `i < j`, strictly between the diagonal and the abelian
/// Dyck path: column `i`, row `j` counted from the bottom. These are exactly
/// the edges of the associated ordered graph.
pub fn dyck_cells(s: &BoardShape) -> BTreeSet<(usize, usize)> {
    let mut cells = BTreeSet::new();
    let (mut x, mut y) = (0usize, 0usize);
    for step in dyck_word(s).chars() {
        match step {
            'N' => y += 1,
            _ => {
                x += 1;
                // column x lies under the path up to height y
                for row in (x + 1)..=y {
                    cells.insert((x, row));
                }
            }
        }
    }
    cells
}

/// Every partition fitting `rows x cols`, once each, ordered by size and then
/// reverse-lexicographically. `max_cells` drops larger shapes.
pub fn enumerate_shapes(cols: usize, rows: usize, max_cells: Option<usize>) -> Vec<BoardShape> {
    fn rec(rows_left: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if rows_left == 0 {
            return;
        }
        for p in 1..=cap {
            prefix.push(p);
            rec(rows_left - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut all);
    let mut shapes: Vec<BoardShape> = all
        .into_iter()
        .filter(|p| max_cells.is_none_or(|mx| p.iter().sum::<usize>() <= mx))
        .map(|parts| BoardShape { parts, rows, cols })
        .collect();
    shapes.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts)));
    shapes
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sh(parts: &[usize], rows: usize, cols: usize) -> BoardShape {
        BoardShape::new(parts.to_vec(), rows, cols).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn construction_validates() {
        assert!(BoardShape::new(vec![1, 2], 2, 3).is_err());
        assert!(BoardShape::new(vec![4], 2, 3).is_err());
        assert!(BoardShape::new(vec![1, 1, 1], 2, 3).is_err());
        assert_eq!(sh(&[2, 1, 0, 0], 3, 3).parts(), &[2, 1]);
        assert_eq!(BoardShape::empty(0, 0).size(), 0);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&sh(&[2, 1], 2, 3)), sh(&[2, 1], 3, 2));
        assert_eq!(conjugate(&sh(&[3], 1, 3)), sh(&[1, 1, 1], 3, 1));
        assert_eq!(
            conjugate(&sh(&[6, 3, 3, 1], 6, 8)).parts(),
            &[4, 3, 3, 1, 1, 1]
        );
    }

    #[test]
    fn delete_column_examples() {
        assert_eq!(
            delete_column(&sh(&[2, 1], 2, 3), 1).unwrap(),
            sh(&[1], 2, 2)
        );
        assert_eq!(
            delete_column(&sh(&[2, 1], 2, 3), 3).unwrap(),
            sh(&[2, 1], 2, 2)
        );
        for j in 1..=4 {
            assert_eq!(
                delete_column(&sh(&[4, 4], 3, 4), j).unwrap(),
                sh(&[3, 3], 3, 3)
            );
        }
        assert!(delete_column(&sh(&[2, 1], 2, 3), 4).is_err());
        assert!(delete_column(&sh(&[2, 1], 2, 3), 0).is_err());
    }

    #[test]
    fn delete_row_examples() {
        assert_eq!(delete_row(&sh(&[2, 1], 2, 3), 2).unwrap(), sh(&[2], 1, 3));
        assert_eq!(delete_row(&sh(&[2, 1], 2, 3), 1).unwrap(), sh(&[1], 1, 3));
        for r in 1..=2 {
            assert_eq!(delete_row(&sh(&[4, 4], 3, 4), r).unwrap(), sh(&[4], 2, 4));
        }
        assert_eq!(
            delete_row(&sh(&[4, 4], 3, 4), 3).unwrap(),
            sh(&[4, 4], 2, 4)
        );
        assert!(delete_row(&sh(&[2, 1], 2, 3), 3).is_err());
    }

    #[test]
    fn contract_cell_examples() {
        assert_eq!(
            contract_cell(&sh(&[2, 1], 2, 3), 1, 1).unwrap(),
            BoardShape::empty(1, 2)
        );
        assert_eq!(
            contract_cell(&sh(&[1], 1, 1), 1, 1).unwrap(),
            BoardShape::empty(0, 0)
        );
        for (i, j) in [(1, 1), (2, 3), (1, 4)] {
            assert_eq!(
                contract_cell(&sh(&[4, 4], 3, 4), i, j).unwrap(),
                sh(&[3], 2, 3)
            );
        }
        assert!(contract_cell(&sh(&[2, 1], 2, 3), 2, 2).is_err());
    }

    #[test]
    fn corner_ops_examples() {
        let (d, c) = corner_ops(&sh(&[2, 1], 2, 3), CellRef::new(2, 1)).unwrap();
        assert_eq!(d, sh(&[2], 2, 3));
        assert_eq!(c, sh(&[1], 1, 2));

        let (d, c) = corner_ops(&sh(&[1], 1, 2), CellRef::new(1, 1)).unwrap();
        assert_eq!(d, BoardShape::empty(1, 2));
        assert_eq!(c, BoardShape::empty(0, 1));

        let (d, c) = corner_ops(&sh(&[6, 3, 3, 1], 6, 8), CellRef::new(1, 6)).unwrap();
        assert_eq!(d.parts(), &[5, 3, 3, 1]);
        assert_eq!(c.parts(), &[3, 3, 1]);
        assert_eq!((c.rows(), c.cols()), (5, 7));

        assert!(corner_ops(&sh(&[2, 2], 2, 3), CellRef::new(1, 2)).is_err());
    }

    fn bipartite(s: &BoardShape) -> usize {
        let m = s.cols();
        dyck_cells(s)
            .iter()
            .filter(|&&(i, j)| i <= m && j > m)
            .count()
    }

    #[test]
    fn dyck_cells_examples() {
        assert_eq!(bipartite(&BoardShape::empty(2, 3)), 6);
        assert_eq!(bipartite(&sh(&[3, 3], 2, 3)), 0);
        assert_eq!(bipartite(&sh(&[2, 1], 2, 3)), 3);
        assert_eq!(dyck_word(&sh(&[2, 1], 2, 3)), "NNNENENEEE");
        assert_eq!(
            dyck_cells(&sh(&[2, 1], 2, 3))
                .into_iter()
                .collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
        );
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_shapes(1, 1, None),
            vec![BoardShape::empty(1, 1), sh(&[1], 1, 1)]
        );
        let two: Vec<_> = enumerate_shapes(2, 2, None)
            .into_iter()
            .map(|s| s.parts().to_vec())
            .collect();
        assert_eq!(
            two,
            vec![vec![], vec![1], vec![2], vec![1, 1], vec![2, 1], vec![2, 2]]
        );
        assert_eq!(enumerate_shapes(3, 2, None).len(), 10);
        assert_eq!(enumerate_shapes(3, 2, Some(2)).len(), 4);
        assert_eq!(enumerate_shapes(0, 3, None), vec![BoardShape::empty(3, 0)]);
        for m in 0..=6 {
            for n in 0..=6 {
                let all = enumerate_shapes(m, n, None);
                assert_eq!(all.len(), binomial(m + n, n));
                let distinct: BTreeSet<_> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_shape("2,1", "2x3").unwrap(), sh(&[2, 1], 2, 3));
        assert_eq!(parse_shape("0", "2x3").unwrap(), BoardShape::empty(2, 3));
        assert!(parse_shape("2,1", "2by3").is_err());
        assert!(parse_shape("a", "2x3").is_err());
    }

    fn arb_shape() -> impl Strategy<Value = BoardShape> {
        (0usize..6, 0usize..6).prop_flat_map(|(m, n)| {
            let all = enumerate_shapes(m, n, None);
            let len = all.len();
            (0..len).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(s in arb_shape()) {
            let c = conjugate(&s);
            prop_assert_eq!(c.size(), s.size());
            prop_assert_eq!(conjugate(&c), s);
        }

        #[test]
        fn surgery_stays_valid(s in arb_shape()) {
            for j in 1..=s.cols() {
                let d = delete_column(&s, j).unwrap();
                prop_assert!(BoardShape::new(d.parts().to_vec(), d.rows(), d.cols()).is_ok());
            }
            for r in 1..=s.rows() {
                let d = delete_row(&s, r).unwrap();
                prop_assert!(BoardShape::new(d.parts().to_vec(), d.rows(), d.cols()).is_ok());
            }
            for cell in s.cells() {
                let both = contract_cell(&s, cell.row, cell.col).unwrap();
                let other_order = delete_row(&delete_column(&s, cell.col).unwrap(), cell.row).unwrap();
                prop_assert_eq!(&both, &other_order);
                prop_assert_eq!(both.size(), s.size() + 1 - s.row_len(cell.row) - s.col_len(cell.col));
            }
        }
    }
}
