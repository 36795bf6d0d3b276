import pytest

# acceptance test -> one-line description for the summary
CRITERIA = {
    "test_glob_gl2_formula_matches_brute_force": "glob S(2,r): closed form = brute force, p in {2,3,5,7}, r <= 200",
    "test_glob_gl3_formula_matches_brute_force": "glob S(3,r): closed form = brute force, p in {2,3,5,7}, r <= 60",
    "test_quantum_glob_formula_matches_brute_force": "glob S_q(2,r): closed form = brute force, l in 2..5, p in {2,3,5}, r <= 120",
    "test_sl2_two_step_filtration_characters": "SL2 two-step filtration: section characters sum to ch nabla(mr+a)",
    "test_sl3_p_filtration_characters": "SL3 p-filtrations: section characters sum to ch nabla(lam), twists <= 6",
    "test_good_resolution_euler_identities": "good resolutions: Euler identity for all four kinds, a,b <= 6, p in {3,5}",
    "test_quotient_highest_weights": "quotient highest weights: SL2 closed form and SL3 bound g(hw) <= g - 1",
    "test_g_monotone_within_blocks": "g is monotone inside primitive blocks, coordinates <= 30",
    "test_steinberg_square_contains_steinberg_once": "St (x) St: nabla(St) exactly once, nothing else linked to it",
    "test_character_infrastructure": "characters: Weyl invariance, dimensions, round trips, Steinberg factorization",
}

_outcomes: dict[str, bool] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: end-to-end acceptance criterion")


def pytest_runtest_logreport(report):
    name = report.nodeid.split("::")[-1].split("[")[0]
    if name not in CRITERIA:
        return
    if report.when == "call" or report.failed:
        _outcomes[name] = _outcomes.get(name, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for i, (name, text) in enumerate(CRITERIA.items(), 1):
        if name not in _outcomes:
            continue
        status = "PASS" if _outcomes[name] else "FAIL"
        terminalreporter.write_line(f"{status}  {i:2d}. {text}")
