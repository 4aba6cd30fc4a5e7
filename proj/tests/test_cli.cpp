// test_cli.cpp — end-to-end checks for the qpump executable

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& name) {
    std::printf("%s %s\n", ok ? "[ok]  " : "[FAIL]", name.c_str());
    if (!ok) ++failures;
}

int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}

int main() {
    const char* bin_env = std::getenv("QPUMP_BIN");
    if (!bin_env) {
        std::fprintf(stderr, "QPUMP_BIN is not set\n");
        return 1;
    }
    const std::string bin = std::string("'") + bin_env + "'";

    const fs::path dir = fs::temp_directory_path() / "qpump_cli_test";
    fs::create_directories(dir);
    const auto at = [&dir](const char* name) { return (dir / name).string(); };
    const std::string null_out = " > " + at("stdout.txt") + " 2> " + at("stderr.txt");

    check(run_command(bin + null_out) == 2, "no arguments exits with 2");
    check(run_command(bin + " --help" + null_out) == 0, "--help exits with 0");
    check(run_command(bin + " nonsense" + null_out) == 2, "unknown subcommand exits with 2");
    check(run_command(bin + " decompose --bogus" + null_out) == 2, "unknown flag exits with 2");

    write_file(dir / "small.cfg", "n = 11\nbeta_s = 0.5\n");

    const int decompose_rc = run_command(bin + " decompose --config " + at("small.cfg") +
                                         " --out " + at("direct.csv") + null_out);
    check(decompose_rc == 0, "decompose with --out exits with 0");
    const auto decompose_lines = lines_of(slurp(dir / "direct.csv"));
    check(decompose_lines.size() == 3, "decompose writes a header and two bath rows");
    check(!decompose_lines.empty() &&
              decompose_lines[0] == "bath,G1,G2,G3,direct_total,identity_residual",
          "decompose header names the split columns");

    run_command(bin + " decompose --config " + at("small.cfg") + " > " + at("piped.csv") +
                " 2> " + at("stderr.txt"));
    check(slurp(dir / "piped.csv") == slurp(dir / "direct.csv"),
          "stdout and --out deliver identical bytes");

    write_file(dir / "sweep.cfg",
               "omega_start_THz = 1\nomega_stop_THz = 2\nomega_count = 2\n"
               "beta_s = 0.5,3\nn = 11\n");
    check(run_command(bin + " flux-sweep --config " + at("sweep.cfg") + " --out " +
                      at("sweep1.csv") + null_out) == 0,
          "flux-sweep exits with 0");
    const auto sweep_lines = lines_of(slurp(dir / "sweep1.csv"));
    check(sweep_lines.size() == 5, "flux-sweep writes one row per grid point");
    check(!sweep_lines.empty() && sweep_lines[0] == "Omega_THz,beta_s,J_hat_per_s,J_hat_geo_per_s",
          "flux-sweep header names the sweep columns");

    run_command(bin + " flux-sweep --config " + at("sweep.cfg") + " --threads 1 --out " +
                at("sweep_t1.csv") + null_out);
    run_command(bin + " flux-sweep --config " + at("sweep.cfg") + " --threads 3 --out " +
                at("sweep_t3.csv") + null_out);
    check(slurp(dir / "sweep_t1.csv") == slurp(dir / "sweep_t3.csv"),
          "thread count does not change the output bytes");

    write_file(dir / "bad.cfg", "not_a_key = 1\n");
    check(run_command(bin + " decompose --config " + at("bad.cfg") + null_out) == 2,
          "config errors exit with 2");
    check(slurp(dir / "stderr.txt").find("unknown key") != std::string::npos,
          "config errors are reported on stderr");
    check(run_command(bin + " decompose --config " + at("missing.cfg") + null_out) == 2,
          "missing config file exits with 2");

    check(run_command(bin + " decompose --config " + at("small.cfg") + " --out " +
                      at("no_dir/out.csv") + null_out) == 1,
          "unwritable output path exits with 1");

    write_file(dir / "profile.cfg", "n = 11\nbeta_s = 0.5\nperiod_count = 2\n");
    check(run_command(bin + " phi0-profile --config " + at("profile.cfg") + " --out " +
                      at("profile.csv") + null_out) == 0,
          "phi0-profile exits with 0");
    const auto profile_lines = lines_of(slurp(dir / "profile.csv"));
    check(profile_lines.size() == 23, "phi0-profile writes one row per tiled interval");
    check(!profile_lines.empty() && profile_lines[0] == "j,phi0_hat",
          "phi0-profile header names the profile columns");

    write_file(dir / "trace.cfg",
               "t_grid_start = 0.5\nt_grid_stop = 1\nt_grid_count = 2\n"
               "lambda_settings = 100:200\n");
    check(run_command(bin + " lambda-trace --config " + at("trace.cfg") + " --out " +
                      at("trace.csv") + null_out) == 0,
          "lambda-trace exits with 0");
    const auto trace_lines = lines_of(slurp(dir / "trace.csv"));
    check(trace_lines.size() == 3, "lambda-trace writes one row per time sample");
    check(!trace_lines.empty() &&
              trace_lines[0] == "t_scaled,lambda_t,lambda_markov,rel_error,setting_label",
          "lambda-trace header names the trace columns");

    check(run_command(bin + " geometric --out " + at("geo.csv") + null_out) == 0,
          "geometric exits with 0 on the default protocol");
    const auto geo_lines = lines_of(slurp(dir / "geo.csv"));
    check(geo_lines.size() == 3, "geometric writes the line and surface rows");
    check(!geo_lines.empty() && geo_lines[0] == "method,J1_R,J2_R,quad_err",
          "geometric header names the quadrature columns");

    fs::remove_all(dir);
    if (failures != 0) {
        std::printf("%d CLI check(s) failed\n", failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
