//! Deterministic random-program generator for the supported grammar.
//!
//! Produces syntactically valid sources from a seed together with an
//! independent count of the decision points and function components it
//! emitted, so tests can check cyclomatic complexity against the
//! decisions-plus-components oracle without going through the CFG code.

#[doc(hidden)]
pub struct GeneratedProgram {
    pub source: String,
    /// Decision points emitted: if, loop conditions, ternaries, `&&`/`||`,
    /// switch cases, catch clauses.
    pub decisions: u64,
    /// Function components emitted (the top-level chain adds one more).
    pub functions: u64,
}

impl GeneratedProgram {
    /// Independent cyclomatic oracle: one path per component plus one per
    /// decision point.
    pub fn expected_cyclomatic(&self) -> u64 {
        self.decisions + self.functions + 1
    }
}

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        // xorshift64*
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

const IDENTS: &[&str] = &["a", "b", "c", "x", "y", "z", "acc", "item", "total", "flag"];

struct Gen {
    rng: Rng,
    out: String,
    decisions: u64,
    functions: u64,
    depth: u32,
    in_function: bool,
}

/// Generate one program from `seed`. Always emits at least one executable
/// top-level statement so the top-level chain is a component.
pub fn generate_program(seed: u64) -> GeneratedProgram {
    let mut g = Gen {
        rng: Rng(seed | 1),
        out: String::new(),
        decisions: 0,
        functions: 0,
        depth: 0,
        in_function: false,
    };
    let stmts = 1 + g.rng.below(6);
    g.simple_statement();
    g.out.push('\n');
    for _ in 0..stmts {
        g.statement();
        g.out.push('\n');
    }
    GeneratedProgram {
        source: g.out,
        decisions: g.decisions,
        functions: g.functions,
    }
}

impl Gen {
    fn ident(&mut self) -> &'static str {
        IDENTS[self.rng.below(IDENTS.len() as u64) as usize]
    }

    fn simple_statement(&mut self) {
        let id = self.ident();
        self.out.push_str(id);
        self.out.push_str(" = ");
        self.expr(2);
        self.out.push(';');
    }

    fn statement(&mut self) {
        if self.depth >= 3 {
            self.simple_statement();
            return;
        }
        self.depth += 1;
        match self.rng.below(10) {
            0 => {
                self.out.push_str("var ");
                let id = self.ident();
                self.out.push_str(id);
                self.out.push_str(" = ");
                self.expr(2);
                self.out.push(';');
            }
            1 => {
                self.decisions += 1;
                self.out.push_str("if (");
                self.expr(1);
                self.out.push_str(") { ");
                self.simple_statement();
                self.out.push_str(" }");
                if self.rng.below(2) == 0 {
                    self.out.push_str(" else { ");
                    self.simple_statement();
                    self.out.push_str(" }");
                }
            }
            2 => {
                self.decisions += 1;
                self.out.push_str("while (");
                self.expr(1);
                self.out.push_str(") { ");
                self.statement();
                self.out.push_str(" }");
            }
            3 => {
                self.decisions += 1;
                self.out.push_str("for (i = 0; i < 4; i++) { ");
                self.simple_statement();
                self.out.push_str(" }");
            }
            4 => {
                self.functions += 1;
                let id = self.ident();
                self.out.push_str("function fn_");
                self.out.push_str(id);
                self.out.push_str("(p, q) { ");
                let was = self.in_function;
                self.in_function = true;
                self.statement();
                self.out.push_str(" return p; }");
                self.in_function = was;
            }
            5 => {
                let cases = 1 + self.rng.below(3);
                self.decisions += cases;
                self.out.push_str("switch (");
                self.expr(1);
                self.out.push_str(") { ");
                for i in 0..cases {
                    self.out.push_str(&format!("case {i}: "));
                    self.simple_statement();
                    self.out.push_str(" break; ");
                }
                if self.rng.below(2) == 0 {
                    self.out.push_str("default: ");
                    self.simple_statement();
                    self.out.push(' ');
                }
                self.out.push('}');
            }
            6 => {
                self.decisions += 1;
                self.out.push_str("try { ");
                self.simple_statement();
                self.out.push_str(" } catch (err) { ");
                self.simple_statement();
                self.out.push_str(" }");
            }
            7 => {
                self.decisions += 1;
                self.out.push_str("do { ");
                self.simple_statement();
                self.out.push_str(" } while (");
                self.expr(1);
                self.out.push_str(");");
            }
            _ => self.simple_statement(),
        }
        self.depth -= 1;
    }

    fn expr(&mut self, budget: u32) {
        if budget == 0 {
            self.atom();
            return;
        }
        match self.rng.below(8) {
            0 => {
                self.atom();
                let op = ["+", "-", "*", "%"][self.rng.below(4) as usize];
                self.out.push_str(&format!(" {op} "));
                self.expr(budget - 1);
            }
            1 => {
                self.decisions += 1;
                let op = if self.rng.below(2) == 0 { "&&" } else { "||" };
                self.atom();
                self.out.push_str(&format!(" {op} "));
                self.expr(budget - 1);
            }
            2 => {
                self.decisions += 1;
                self.atom();
                self.out.push_str(" ? ");
                self.expr(budget - 1);
                self.out.push_str(" : ");
                self.expr(budget - 1);
            }
            3 => {
                let id = self.ident();
                self.out.push_str(&format!("{id}("));
                self.expr(budget - 1);
                self.out.push(')');
            }
            4 => {
                let id = self.ident();
                let prop = self.ident();
                self.out.push_str(&format!("{id}.{prop}"));
            }
            5 => {
                self.functions += 1;
                self.out.push_str("function () { return ");
                self.expr(0);
                self.out.push_str("; }");
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) {
        match self.rng.below(4) {
            0 => {
                let n = self.rng.below(100);
                self.out.push_str(&n.to_string());
            }
            1 => {
                let id = self.ident();
                self.out.push_str(&format!("'s{id}'"));
            }
            _ => {
                let id = self.ident();
                self.out.push_str(id);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    #[test]
    fn generated_programs_parse() {
        for seed in 0..200 {
            let p = generate_program(seed);
            parse(&p.source).unwrap_or_else(|e| panic!("seed {seed}: {e}\n{}", p.source));
        }
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(generate_program(7).source, generate_program(7).source);
    }
}
