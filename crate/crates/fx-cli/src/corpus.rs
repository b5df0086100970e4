//! The differential corpus: programs evaluated under both the derived and
//! the oracle stacks, which must agree exactly.

/// One corpus entry: source, environment bindings, initial state.
pub struct CorpusProgram {
    pub name: &'static str,
    pub source: &'static str,
    pub env: &'static [(&'static str, i64)],
    pub init_state: i64,
}

const STD_ENV: &[(&str, i64)] = &[("a", 5), ("b", 7)];

/// Programs covering arithmetic, precedence, let-binding, environment
/// reads, logging, state, failure, and their interleavings.
pub fn corpus() -> Vec<CorpusProgram> {
    let p = |name, source, env, init_state| CorpusProgram {
        name,
        source,
        env,
        init_state,
    };
    vec![
        p("plain-add", "1 + 2", STD_ENV, 0),
        p("precedence-left", "2 * 3 + 4", STD_ENV, 0),
        p("precedence-right", "2 + 3 * 4", STD_ENV, 0),
        p("parens-wrap", "(2 + 3) * 4", STD_ENV, 0),
        p("subtraction", "10 - 3", STD_ENV, 0),
        p("integer-division", "7 / 2", STD_ENV, 0),
        p("left-assoc-chain", "10 - 3 - 2", STD_ENV, 0),
        p("divide-by-zero", "1 / 0", STD_ENV, 0),
        p("unbound-variable", "x", STD_ENV, 0),
        p("ask-single", "ask a", STD_ENV, 0),
        p("ask-both", "ask a + ask b", STD_ENV, 0),
        p("ask-missing", "ask missing", STD_ENV, 2),
        p("let-square", "let x = 3 in x * x", STD_ENV, 0),
        p("let-through-env", "let x = ask a in x / 0", STD_ENV, 1),
        p("let-nested", "let x = 2 in let y = x + 1 in x * y", STD_ENV, 0),
        p("get-initial", "get", STD_ENV, 9),
        p("put-returns", "put(5)", STD_ENV, 7),
        p("put-then-get", "let _ = put(3) in get", STD_ENV, 9),
        p("log-then-put", "let _ = log(get) in put(5)", STD_ENV, 7),
        p("log-order", "log(1) + log(2)", STD_ENV, 0),
        p("state-chain", "let a = get in let _ = put(a + 1) in log(get)", STD_ENV, 4),
        p("log-both-asks", "let _ = log(ask a) in let _ = log(ask b) in ask a * ask b", STD_ENV, 0),
        p("wrap-at-modulus", "put(get + 1)", STD_ENV, 15),
        p("error-after-log", "let _ = log(7) in 1 / 0", STD_ENV, 2),
        p("late-unbound", "let x = 5 in y", STD_ENV, 3),
        p("state-dependent-div", "let d = ask a - ask b in 10 / (d + 2)", STD_ENV, 0),
    ]
}
