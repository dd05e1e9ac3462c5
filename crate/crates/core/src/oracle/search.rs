use crate::verify::{cyclically_adjacent, Mode};

/// Colors that may follow `prev` on the next edge, ascending.
///
/// On a cycle each vertex sees exactly two edges, so the palette rule reduces
/// to a successor rule: `prev ± 1` in interval mode, `prev ± 1 mod t` in
/// cyclic mode.
fn successors(prev: usize, t: usize, mode: Mode) -> ([usize; 2], usize) {
    let mut out = [0usize; 2];
    let mut len = 0;
    let mut push = |c: usize| {
        if c != prev && !out[..len].contains(&c) {
            out[len] = c;
            len += 1;
        }
    };
    match mode {
        Mode::Interval => {
            if prev > 1 {
                push(prev - 1);
            }
            if prev < t {
                push(prev + 1);
            }
        }
        Mode::CyclicInterval => {
            push(if prev == 1 { t } else { prev - 1 });
            push(if prev == t { 1 } else { prev + 1 });
        }
    }
    out[..len].sort_unstable();
    (out, len)
}

fn closes(last: usize, first: usize, t: usize, mode: Mode) -> bool {
    last != first
        && match mode {
            Mode::Interval => last.abs_diff(first) == 1,
            Mode::CyclicInterval => cyclically_adjacent(last, first, t),
        }
}

struct Walk<'a, F> {
    n: usize,
    t: usize,
    mode: Mode,
    colors: Vec<usize>,
    uses: Vec<usize>,
    missing: usize,
    visit: &'a mut F,
}

impl<F: FnMut(&[usize]) -> bool> Walk<'_, F> {
    fn place(&mut self, c: usize) {
        if self.uses[c] == 0 {
            self.missing -= 1;
        }
        self.uses[c] += 1;
        self.colors.push(c);
    }

    fn unplace(&mut self) {
        let c = self.colors.pop().expect("nonempty walk");
        self.uses[c] -= 1;
        if self.uses[c] == 0 {
            self.missing += 1;
        }
    }

    /// Returns `false` once the visitor asks to stop.
    fn extend(&mut self) -> bool {
        let placed = self.colors.len();
        if self.missing > self.n - placed {
            return true;
        }
        let prev = self.colors[placed - 1];
        if placed == self.n {
            if self.missing == 0 && closes(prev, self.colors[0], self.t, self.mode) {
                return (self.visit)(&self.colors);
            }
            return true;
        }
        let (next, len) = successors(prev, self.t, self.mode);
        for &c in &next[..len] {
            self.place(c);
            let go_on = self.extend();
            self.unplace();
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Depth-first walk over every valid coloring of `C(n)` with `t` colors, in
/// lexicographic order. `visit` returns `false` to stop early.
pub(super) fn walk<F>(n: usize, t: usize, mode: Mode, fix_first_color: bool, mut visit: F)
where
    F: FnMut(&[usize]) -> bool,
{
    let mut state = Walk {
        n,
        t,
        mode,
        colors: Vec::with_capacity(n),
        uses: vec![0; t + 1],
        missing: t,
        visit: &mut visit,
    };
    let last_first = if fix_first_color { 1 } else { t };
    for first in 1..=last_first {
        state.place(first);
        let go_on = state.extend();
        state.unplace();
        if !go_on {
            return;
        }
    }
}
