#pragma once

// Entry point for the genusgauge command-line tool; returns the process
// exit code (0 ok/feasible, 1 scan counterexample, 2 usage, 3 infeasible,
// 4 resource limit, 5 fixture problem).
int run_cli(int argc, char** argv);
