//! Fixed command corpus shared by the golden and acceptance suites.
//!
//! Every expected string was verified against the underlying mathematics
//! (endpoints squared straddle the radicand, widths are exact powers of
//! two, and so on) before being frozen here. Outputs are byte-exact.

pub struct Case {
    pub args: &'static [&'static str],
    pub code: i32,
    pub stdout: &'static str,
    pub stderr: &'static str,
}

const fn case(
    args: &'static [&'static str],
    code: i32,
    stdout: &'static str,
    stderr: &'static str,
) -> Case {
    Case {
        args,
        code,
        stdout,
        stderr,
    }
}

pub fn corpus() -> Vec<Case> {
    vec![
        // --- JSON mode, successful commands -------------------------------
        case(
            &["ultrareal", "isolate-roots", "x^3 - x", "--json"],
            0,
            "{\"command\":\"isolate-roots\",\"status\":\"ok\",\"result\":{\"count\":3,\"roots\":[{\"kind\":\"exact\",\"value\":\"-1\"},{\"kind\":\"exact\",\"value\":\"0\"},{\"kind\":\"exact\",\"value\":\"1\"}]},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "isolate-roots", "(x^2 - 2)*(x - 3)", "--json"],
            0,
            "{\"command\":\"isolate-roots\",\"status\":\"ok\",\"result\":{\"count\":3,\"roots\":[{\"defining\":\"x^3 - 3*x^2 - 2*x + 6\",\"hi\":\"0\",\"kind\":\"isolated\",\"lo\":\"-7\"},{\"defining\":\"x^3 - 3*x^2 - 2*x + 6\",\"hi\":\"7/4\",\"kind\":\"isolated\",\"lo\":\"0\"},{\"defining\":\"x^3 - 3*x^2 - 2*x + 6\",\"hi\":\"7/2\",\"kind\":\"isolated\",\"lo\":\"7/4\"}]},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "count-roots", "x^2 - 2", "-2", "2", "--json"],
            0,
            "{\"command\":\"count-roots\",\"status\":\"ok\",\"result\":2,\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "ivt-root", "x^2 - 2", "0", "2", "--json"],
            0,
            "{\"command\":\"ivt-root\",\"status\":\"ok\",\"result\":{\"hi\":\"759250125/536870912\",\"kind\":\"sign_change\",\"lo\":\"6074000999/4294967296\"},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "ivt-root", "x - 1/2", "0", "1", "--json"],
            0,
            "{\"command\":\"ivt-root\",\"status\":\"ok\",\"result\":{\"kind\":\"exact\",\"root\":\"1/2\"},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "odd-root", "x^3 + 2*x + 5", "--json"],
            0,
            "{\"command\":\"odd-root\",\"status\":\"ok\",\"result\":{\"defining\":\"x^3 + 2*x + 5\",\"hi\":\"-5704871295/4294967296\",\"kind\":\"isolated\",\"lo\":\"-22819485183/17179869184\"},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "sqrt", "9/4", "--json"],
            0,
            "{\"command\":\"sqrt\",\"status\":\"ok\",\"result\":{\"kind\":\"exact\",\"value\":\"3/2\"},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "sqrt", "2", "--json"],
            0,
            "{\"command\":\"sqrt\",\"status\":\"ok\",\"result\":{\"defining\":\"x^2 - 2\",\"hi\":\"759250125/536870912\",\"kind\":\"isolated\",\"lo\":\"24296003997/17179869184\"},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "classify", "(3*w+1)/(w+2)", "--json"],
            0,
            "{\"command\":\"classify\",\"status\":\"ok\",\"result\":\"appreciable\",\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "classify", "2 + 1/w^2", "--json"],
            0,
            "{\"command\":\"classify\",\"status\":\"ok\",\"result\":\"appreciable\",\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "shadow", "1/n", "--json"],
            0,
            "{\"command\":\"shadow\",\"status\":\"ok\",\"result\":\"0\",\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "shadow", "alt{1/n; 2/n}", "--json"],
            0,
            "{\"command\":\"shadow\",\"status\":\"ok\",\"result\":\"0\",\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "compare", "1/n", "1/(n+1)", "--json"],
            0,
            "{\"command\":\"compare\",\"status\":\"ok\",\"result\":\"greater\",\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "compare", "w", "1000000", "--json"],
            0,
            "{\"command\":\"compare\",\"status\":\"ok\",\"result\":\"greater\",\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "compare", "w", "n", "--json"],
            0,
            "{\"command\":\"compare\",\"status\":\"ok\",\"result\":\"equal\",\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "cut-classify", "x^2 - 2", "1", "2", "--json"],
            0,
            "{\"command\":\"cut-classify\",\"status\":\"ok\",\"result\":{\"cut\":\"gap\"},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "cut-classify", "x^2 - 9/4", "1", "2", "--json"],
            0,
            "{\"command\":\"cut-classify\",\"status\":\"ok\",\"result\":{\"cut\":\"max_in_lower\",\"value\":\"3/2\"},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "hyper-ivt", "x - 1/w", "-1", "1", "--levels", "3", "--json"],
            0,
            "{\"command\":\"hyper-ivt\",\"status\":\"ok\",\"result\":{\"levels\":[{\"level\":2,\"outcome\":{\"kind\":\"exact\",\"root\":\"1/2\"},\"width\":\"1/2\"},{\"level\":4,\"outcome\":{\"kind\":\"exact\",\"root\":\"1/4\"},\"width\":\"1/4\"},{\"level\":8,\"outcome\":{\"kind\":\"exact\",\"root\":\"1/8\"},\"width\":\"1/8\"}],\"residual\":{\"bound\":null,\"class\":\"zero\"}},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        case(
            &["ultrareal", "hyper-ivt", "x^2 - (2 + 1/w)", "0", "2", "--levels", "4", "--json"],
            0,
            "{\"command\":\"hyper-ivt\",\"status\":\"ok\",\"result\":{\"levels\":[{\"level\":2,\"outcome\":{\"hi\":\"2\",\"kind\":\"isolated\",\"lo\":\"3/2\",\"midpoint\":\"7/4\"},\"width\":\"1/2\"},{\"level\":4,\"outcome\":{\"kind\":\"exact\",\"root\":\"3/2\"},\"width\":\"1/4\"},{\"level\":8,\"outcome\":{\"hi\":\"3/2\",\"kind\":\"isolated\",\"lo\":\"11/8\",\"midpoint\":\"23/16\"},\"width\":\"1/8\"},{\"level\":16,\"outcome\":{\"hi\":\"23/16\",\"kind\":\"isolated\",\"lo\":\"11/8\",\"midpoint\":\"45/32\"},\"width\":\"1/16\"}],\"residual\":{\"bound\":\"6/w\",\"class\":\"infinitesimal (nonzero)\"}},\"error_code\":null,\"error_message\":null}\n",
            "",
        ),
        // --- JSON mode, one instance of every error code ------------------
        case(
            &["ultrareal", "classify", "1/0", "--json"],
            2,
            "{\"command\":\"classify\",\"status\":\"error\",\"result\":null,\"error_code\":\"parse_error\",\"error_message\":\"parse error: division by zero in a constant\"}\n",
            "",
        ),
        case(
            &["ultrareal", "classify", "1/(w - w)", "--json"],
            3,
            "{\"command\":\"classify\",\"status\":\"error\",\"result\":null,\"error_code\":\"division_by_zero\",\"error_message\":\"division by zero\"}\n",
            "",
        ),
        case(
            &["ultrareal", "classify", "1/alt{0; n}", "--json"],
            3,
            "{\"command\":\"classify\",\"status\":\"error\",\"result\":null,\"error_code\":\"eventually_zero_divisor\",\"error_message\":\"divisor sequence vanishes on a whole residue class\"}\n",
            "",
        ),
        case(
            &["ultrareal", "compare", "alt{1; -1}", "0", "--json"],
            3,
            "{\"command\":\"compare\",\"status\":\"error\",\"result\":null,\"error_code\":\"ultrafilter_dependent\",\"error_message\":\"verdict depends on the choice of ultrafilter\"}\n",
            "",
        ),
        case(
            &["ultrareal", "compare", "(w+1)/w", "alt{1; 1 + 1/n}", "--json"],
            3,
            "{\"command\":\"compare\",\"status\":\"error\",\"result\":null,\"error_code\":\"ultrafilter_dependent\",\"error_message\":\"verdict depends on the choice of ultrafilter\"}\n",
            "",
        ),
        case(
            &["ultrareal", "shadow", "w", "--json"],
            3,
            "{\"command\":\"shadow\",\"status\":\"error\",\"result\":null,\"error_code\":\"not_limited\",\"error_message\":\"element is not limited; no standard part exists\"}\n",
            "",
        ),
        case(
            &["ultrareal", "classify", "alt{1; -1}", "--field", "qw", "--json"],
            3,
            "{\"command\":\"classify\",\"status\":\"error\",\"result\":null,\"error_code\":\"not_rational_function\",\"error_message\":\"sequence is not a rational function of the index\"}\n",
            "",
        ),
        case(
            &["ultrareal", "count-roots", "x", "2", "1", "--json"],
            3,
            "{\"command\":\"count-roots\",\"status\":\"error\",\"result\":null,\"error_code\":\"degenerate_interval\",\"error_message\":\"interval is empty or degenerate\"}\n",
            "",
        ),
        case(
            &["ultrareal", "ivt-root", "x^2 + 1", "0", "2", "--json"],
            3,
            "{\"command\":\"ivt-root\",\"status\":\"error\",\"result\":null,\"error_code\":\"no_sign_change\",\"error_message\":\"no sign change on the interval\"}\n",
            "",
        ),
        case(
            &["ultrareal", "sqrt", "-1", "--json"],
            3,
            "{\"command\":\"sqrt\",\"status\":\"error\",\"result\":null,\"error_code\":\"negative_radicand\",\"error_message\":\"square root of a negative rational\"}\n",
            "",
        ),
        case(
            &["ultrareal", "hyper-ivt", "x - 1/(w - 2)", "-1", "1", "--levels", "1", "--json"],
            3,
            "{\"command\":\"hyper-ivt\",\"status\":\"error\",\"result\":null,\"error_code\":\"undefined_instantiation\",\"error_message\":\"instantiation undefined at every scheduled level\"}\n",
            "",
        ),
        case(
            &["ultrareal", "cut-classify", "x^2 - 2", "-2", "2", "--json"],
            3,
            "{\"command\":\"cut-classify\",\"status\":\"error\",\"result\":null,\"error_code\":\"not_isolating\",\"error_message\":\"interval does not isolate exactly one root\"}\n",
            "",
        ),
        case(
            &["ultrareal", "odd-root", "x^2 - 2", "--json"],
            3,
            "{\"command\":\"odd-root\",\"status\":\"error\",\"result\":null,\"error_code\":\"not_odd_degree\",\"error_message\":\"polynomial must have odd degree\"}\n",
            "",
        ),
        case(
            &["ultrareal", "isolate-roots", "0", "--json"],
            3,
            "{\"command\":\"isolate-roots\",\"status\":\"error\",\"result\":null,\"error_code\":\"zero_polynomial\",\"error_message\":\"the zero polynomial vanishes everywhere\"}\n",
            "",
        ),
        // --- Text mode ----------------------------------------------------
        case(
            &["ultrareal", "classify", "1/w"],
            0,
            "infinitesimal (nonzero)\n",
            "",
        ),
        case(
            &["ultrareal", "shadow", "(3*w+1)/(w+2)"],
            0,
            "3\n",
            "",
        ),
        case(
            &["ultrareal", "compare", "1/n", "0"],
            0,
            "greater\n",
            "",
        ),
        case(
            &["ultrareal", "isolate-roots", "x^3 - x"],
            0,
            "3 real roots\n  -1\n  0\n  1\n",
            "",
        ),
        case(
            &["ultrareal", "ivt-root", "x^2 - 2", "0", "2"],
            0,
            "sign change on [6074000999/4294967296, 759250125/536870912] (width 1/4294967296)\n",
            "",
        ),
        case(
            &["ultrareal", "sqrt", "2"],
            0,
            "in [24296003997/17179869184, 759250125/536870912] (defining x^2 - 2)\n",
            "",
        ),
        case(
            &["ultrareal", "cut-classify", "x^2 - 9/4", "1", "2"],
            0,
            "max in lower at 3/2\n",
            "",
        ),
        case(
            &["ultrareal", "hyper-ivt", "x^2 - (2 + 1/w)", "0", "2", "--levels", "4"],
            0,
            "level 2: [3/2, 2] (midpoint 7/4)\nlevel 4: exact root 3/2\nlevel 8: [11/8, 3/2] (midpoint 23/16)\nlevel 16: [11/8, 23/16] (midpoint 45/32)\nresidual: infinitesimal (nonzero) (bound 6/w)\n",
            "",
        ),
        case(
            &["ultrareal", "isolate-roots", "x +"],
            2,
            "",
            "error: parse error: unexpected end of input\n",
        ),
    ]
}
