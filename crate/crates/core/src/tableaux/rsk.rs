use super::{Permutation, StandardTableau};

/// Row-insertion RSK; returns the insertion tableau `P` and recording tableau `Q`.
pub fn rsk(sigma: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (k, &x) in sigma.images().iter().enumerate() {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![k + 1]);
                break;
            }
            let row = &mut p[r];
            match row.iter().position(|&y| y > x) {
                Some(pos) => {
                    std::mem::swap(&mut row[pos], &mut x);
                    r += 1;
                }
                None => {
                    row.push(x);
                    q[r].push(k + 1);
                    break;
                }
            }
        }
    }
    (
        StandardTableau::from_rows_unchecked(p),
        StandardTableau::from_rows_unchecked(q),
    )
}
