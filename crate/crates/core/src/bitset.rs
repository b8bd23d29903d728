//! Word-slice bitset helpers shared by the graph type and the search engines.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn test(bits: &[u64], i: usize) -> bool {
    bits[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub(crate) fn set(bits: &mut [u64], i: usize) {
    bits[i >> 6] |= 1 << (i & 63);
}

#[inline]
pub(crate) fn clear(bits: &mut [u64], i: usize) {
    bits[i >> 6] &= !(1 << (i & 63));
}

#[inline]
pub(crate) fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_empty(bits: &[u64]) -> bool {
    bits.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn first(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Iterator over the set bits of a word slice, ascending.
pub(crate) struct Ones<'a> {
    bits: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            if self.word >= self.bits.len() {
                return None;
            }
            self.cur = self.bits[self.word];
        }
    }
}

#[inline]
pub(crate) fn ones(bits: &[u64]) -> Ones<'_> {
    Ones {
        bits,
        word: 0,
        cur: bits.first().copied().unwrap_or(0),
    }
}

/// Looks for `size` pairwise adjacent vertices inside `cand`, where `row(v)`
/// yields the adjacency row of `v`. Candidates are extended in increasing
/// order so each clique is visited once; `out` receives the clique on success.
pub(crate) fn find_clique<'r, F>(row: &F, cand: &[u64], size: usize, out: &mut Vec<usize>) -> bool
where
    F: Fn(usize) -> &'r [u64],
{
    if size == 0 {
        return true;
    }
    let avail = count(cand);
    if avail < size {
        return false;
    }
    if size == 1 {
        out.push(first(cand).expect("nonempty candidate set"));
        return true;
    }
    let mut rest = cand.to_vec();
    let mut next = vec![0u64; cand.len()];
    for v in ones(cand) {
        clear(&mut rest, v);
        if count(&rest) + 1 < size {
            break;
        }
        let nb = row(v);
        let mut any = 0;
        for ((dst, &r), &a) in next.iter_mut().zip(rest.iter()).zip(nb) {
            *dst = r & a;
            any |= *dst;
        }
        if any == 0 && size > 1 {
            continue;
        }
        out.push(v);
        if find_clique(row, &next, size - 1, out) {
            return true;
        }
        out.pop();
    }
    false
}

/// Faster path of [`find_clique`] for the single-word case that only answers
/// existence.
#[inline]
pub(crate) fn has_clique_64<F>(row: &F, cand: u64, size: usize) -> bool
where
    F: Fn(usize) -> u64,
{
    match size {
        0 => true,
        1 => cand != 0,
        _ => {
            if (cand.count_ones() as usize) < size {
                return false;
            }
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (rest.count_ones() as usize) + 1 < size {
                    return false;
                }
                if has_clique_64(row, rest & row(v), size - 1) {
                    return true;
                }
            }
            false
        }
    }
}
