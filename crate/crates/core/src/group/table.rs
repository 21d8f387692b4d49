use crate::error::{Error, Result};

/// A validated Cayley table on `0..n` with `0` as the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    products: Vec<u32>,
    inverses: Vec<u32>,
}

impl CayleyTable {
    /// Validates a 0-based table: square, identity at 0, Latin, associative.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("table is empty".into()));
        }
        let mut products = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidTable(format!(
                        "entry {} in row {} is outside 1..={n}",
                        x + 1,
                        i + 1
                    )));
                }
                products.push(x as u32);
            }
        }
        let table = CayleyTable {
            n,
            products,
            inverses: Vec::new(),
        };
        table.validate()
    }

    fn validate(mut self) -> Result<Self> {
        let n = self.n;
        for i in 0..n {
            if self.mul(0, i as u32) != i as u32 || self.mul(i as u32, 0) != i as u32 {
                return Err(Error::InvalidTable(
                    "element 1 is not a two-sided identity".into(),
                ));
            }
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                let r = self.mul(i as u32, j as u32) as usize;
                let c = self.mul(j as u32, i as u32) as usize;
                if std::mem::replace(&mut row_seen[r], true)
                    || std::mem::replace(&mut col_seen[c], true)
                {
                    return Err(Error::InvalidTable(format!(
                        "row or column {} repeats an entry (not a Latin square)",
                        i + 1
                    )));
                }
            }
        }
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                let ab = self.mul(a, b);
                for c in 0..n as u32 {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({}, {}, {})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        self.inverses = (0..n as u32)
            .map(|a| {
                (0..n as u32)
                    .find(|&b| self.mul(a, b) == 0)
                    .expect("Latin square has an inverse in every row")
            })
            .collect();
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.products[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inverse(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn order(&self, a: u32) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn power(&self, a: u32, k: i64) -> u32 {
        let base = if k < 0 { self.inverse(a) } else { a };
        let steps = k.unsigned_abs() % self.order(a);
        (0..steps).fold(0, |acc, _| self.mul(acc, base))
    }
}
