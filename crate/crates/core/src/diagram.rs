//! Box diagrams in the grid, rows indexed from 1 at the top.

use std::collections::BTreeSet;

/// A finite set of (row, column) cells, both 1-based.
pub type Cells = BTreeSet<(u32, u32)>;

/// The left-justified diagram of a weak composition: row i holds cells
/// (i, 1..=α_i).
pub fn composition_diagram(alpha: &[u32]) -> Cells {
    let mut cells = BTreeSet::new();
    for (i, &a) in alpha.iter().enumerate() {
        for j in 1..=a {
            cells.insert((i as u32 + 1, j));
        }
    }
    cells
}

/// Row weight of a cell set within `nrows` rows: entry i counts cells in
/// row i+1.
pub fn row_weight(cells: &Cells, nrows: usize) -> Vec<u32> {
    let mut wt = vec![0u32; nrows];
    for &(r, _) in cells {
        let idx = (r - 1) as usize;
        if idx >= wt.len() {
            wt.resize(idx + 1, 0);
        }
        wt[idx] += 1;
    }
    wt
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_of_composition() {
        let d = composition_diagram(&[0, 2, 1]);
        let expect: Cells = [(2, 1), (2, 2), (3, 1)].into_iter().collect();
        assert_eq!(d, expect);
        assert_eq!(row_weight(&d, 3), vec![0, 2, 1]);
    }

    #[test]
    fn weight_grows_rows_on_demand() {
        let d: Cells = [(5, 1)].into_iter().collect();
        assert_eq!(row_weight(&d, 2), vec![0, 0, 0, 0, 1]);
    }
}
