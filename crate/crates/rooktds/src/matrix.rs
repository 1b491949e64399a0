//! Dense (0,1)-matrices modelling candidate dominating sets of rook's graphs.
//!
//! A vertex set S of the rook's graph K_n □ K_m is stored as an n×m bit
//! matrix: cell (i,j) is 1 exactly when the board square in row i, column j
//! belongs to S. All cell addressing is 1-based.

/// An n×m (0,1)-matrix. Rows and columns are addressed 1-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    n_rows: usize,
    n_cols: usize,
    cells: Vec<bool>, // row-major
}

impl BitMatrix {
    /// All-zero matrix. Both dimensions must be at least 1.
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        assert!(n_rows >= 1 && n_cols >= 1, "matrix dimensions must be positive");
        BitMatrix { n_rows, n_cols, cells: vec![false; n_rows * n_cols] }
    }

    /// Build from byte rows of b'0'/b'1'. Panics on ragged or empty input;
    /// intended for literals in tests and hardcoded small matrices.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty(), "matrix dimensions must be positive");
        let n_cols = rows[0].len();
        let mut m = BitMatrix::zeros(rows.len(), n_cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n_cols, "ragged row {}", i + 1);
            for (j, &b) in row.iter().enumerate() {
                match b {
                    b'0' => {}
                    b'1' => m.cells[i * n_cols + j] = true,
                    _ => panic!("cell bytes must be b'0' or b'1'"),
                }
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        assert!(
            (1..=self.n_rows).contains(&i) && (1..=self.n_cols).contains(&j),
            "cell ({i},{j}) out of range for {}x{} matrix",
            self.n_rows,
            self.n_cols
        );
        (i - 1) * self.n_cols + (j - 1)
    }

    /// Cell value at 1-based (i,j).
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let ix = self.idx(i, j);
        self.cells[ix] = value;
    }

    /// |S|: the number of ones.
    pub fn ones_count(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    /// Per-row and per-column ones counts. Both sum to `ones_count`.
    pub fn line_sums(&self) -> (Vec<usize>, Vec<usize>) {
        let mut rows = vec![0usize; self.n_rows];
        let mut cols = vec![0usize; self.n_cols];
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                if self.cells[i * self.n_cols + j] {
                    rows[i] += 1;
                    cols[j] += 1;
                }
            }
        }
        (rows, cols)
    }

    /// Number of neighbors of board cell (i,j) that lie in S.
    ///
    /// A cell's rook-graph neighbors are the other cells of its row and
    /// column, so the count is r(i) + c(j) - 2*s_ij (the cell itself is not
    /// its own neighbor and must be discounted from both lines when set).
    pub fn neighbors_in_set(&self, i: usize, j: usize) -> usize {
        let s = self.get(i, j) as usize; // validates the indices
        let (rows, cols) = self.line_sums();
        rows[i - 1] + cols[j - 1] - 2 * s
    }

    /// S is a k-tuple total dominating set iff EVERY cell (set or not) has at
    /// least k neighbors in S.
    pub fn is_ktds(&self, k: usize) -> bool {
        assert!(k >= 1, "k must be positive");
        let (rows, cols) = self.line_sums();
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                let s = self.cells[i * self.n_cols + j] as usize;
                if rows[i] + cols[j] - 2 * s < k {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                t.cells[j * self.n_rows + i] = self.cells[i * self.n_cols + j];
            }
        }
        t
    }

    /// Reindex rows and columns: output cell (i,j) = input cell
    /// (row_perm[i-1], col_perm[j-1]). Both slices must be permutations of
    /// 1..=n_rows and 1..=n_cols.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> BitMatrix {
        assert_eq!(row_perm.len(), self.n_rows);
        assert_eq!(col_perm.len(), self.n_cols);
        let mut out = BitMatrix::zeros(self.n_rows, self.n_cols);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                out.cells[i * self.n_cols + j] = self.get(row_perm[i], col_perm[j]);
            }
        }
        out
    }

    /// Submatrix induced by the given 1-based row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> BitMatrix {
        assert!(!rows.is_empty() && !cols.is_empty(), "submatrix must be nonempty");
        let mut out = BitMatrix::zeros(rows.len(), cols.len());
        for (oi, &i) in rows.iter().enumerate() {
            for (oj, &j) in cols.iter().enumerate() {
                out.cells[oi * cols.len() + oj] = self.get(i, j);
            }
        }
        out
    }
}

/// One connected component of the ones of a matrix: two ones are linked when
/// they share a row or a column. Index lists are sorted and 1-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentReport {
    pub row_indices: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub ones: usize,
}

/// Plain union-find over line indices (rows then columns).
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
        }
    }
}

/// Connected components of the ones of `m`, linked through shared lines.
///
/// Every one at (i,j) joins row node i and column node j, so a component is
/// exactly a maximal set of ones reachable through shared rows/columns.
/// All-zero lines belong to no component. Components are reported sorted by
/// their smallest row index.
pub fn components(m: &BitMatrix) -> Vec<ComponentReport> {
    let (n, c) = (m.n_rows(), m.n_cols());
    let mut dsu = Dsu::new(n + c);
    for i in 1..=n {
        for j in 1..=c {
            if m.get(i, j) {
                dsu.union(i - 1, n + j - 1);
            }
        }
    }
    // Group non-empty lines by root; count ones per root.
    let (row_sums, col_sums) = m.line_sums();
    let mut by_root: std::collections::BTreeMap<usize, ComponentReport> = Default::default();
    for i in 1..=n {
        if row_sums[i - 1] == 0 {
            continue;
        }
        let r = dsu.find(i - 1);
        let entry = by_root.entry(r).or_insert_with(|| ComponentReport {
            row_indices: vec![],
            col_indices: vec![],
            ones: 0,
        });
        entry.row_indices.push(i);
        entry.ones += row_sums[i - 1];
    }
    for j in 1..=c {
        if col_sums[j - 1] == 0 {
            continue;
        }
        let r = dsu.find(n + j - 1);
        let entry = by_root.entry(r).or_insert_with(|| ComponentReport {
            row_indices: vec![],
            col_indices: vec![],
            ones: 0,
        });
        entry.col_indices.push(j);
    }
    let mut out: Vec<ComponentReport> = by_root.into_values().collect();
    out.sort_by_key(|comp| comp.row_indices[0]);
    out
}

/// Stack the given blocks along the main diagonal of a
/// (sum of rows)×(sum of cols) matrix, zeros elsewhere. Each input block
/// becomes exactly one component of the output.
pub fn compose_block_diagonal(blocks: &[BitMatrix]) -> BitMatrix {
    assert!(!blocks.is_empty(), "block list must be nonempty");
    let total_rows: usize = blocks.iter().map(|b| b.n_rows()).sum();
    let total_cols: usize = blocks.iter().map(|b| b.n_cols()).sum();
    let mut out = BitMatrix::zeros(total_rows, total_cols);
    let (mut ro, mut co) = (0usize, 0usize);
    for b in blocks {
        for i in 1..=b.n_rows() {
            for j in 1..=b.n_cols() {
                if b.get(i, j) {
                    out.set(ro + i, co + j, true);
                }
            }
        }
        ro += b.n_rows();
        co += b.n_cols();
    }
    out
}
