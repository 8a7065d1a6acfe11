// Drives the halin-td binary end to end: argv[1] = binary, argv[2] = scratch
// directory. Exits nonzero on the first failed expectation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

int run(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_pipeline <halin-td binary> <scratch dir>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const fs::path scratch = argv[2];
    fs::remove_all(scratch);
    fs::create_directories(scratch);
    const std::string dir = (scratch / "d").string();
    const std::string quiet = " 2>/dev/null";

    // generate: two instances, deterministic across runs
    expect(run(bin + " generate --group small --count 2 --seed 7 --out " + dir + quiet) == 0,
           "generate exits 0");
    for (const char* name : {"small_000.gr", "small_000.halin", "small_001.gr", "small_001.halin"})
        expect(fs::exists(fs::path(dir) / name), std::string("generated ") + name);

    const std::string dir2 = (scratch / "d2").string();
    expect(run(bin + " generate --group small --count 2 --seed 7 --out " + dir2 + quiet) == 0,
           "second generate exits 0");
    expect(slurp(fs::path(dir) / "small_000.gr") == slurp(fs::path(dir2) / "small_000.gr"),
           "same seed gives byte-identical .gr");
    expect(slurp(fs::path(dir) / "small_000.halin") == slurp(fs::path(dir2) / "small_000.halin"),
           "same seed gives byte-identical .halin");

    // decompose with explicit annotation, then validate
    const std::string gr0 = dir + "/small_000.gr";
    expect(run(bin + " decompose " + gr0 + " -a " + dir + "/small_000.halin -o " + dir +
               "/small_000.td" + quiet) == 0,
           "decompose exits 0");
    expect(run(bin + " validate " + gr0 + " " + dir + "/small_000.td >/dev/null") == 0,
           "validate accepts");

    // decompose via auto-detected sidecar gives identical bytes
    expect(run(bin + " decompose " + dir + "/small_001.gr -o " + dir + "/a.td" + quiet) == 0,
           "decompose with sidecar auto-detect");
    expect(run(bin + " decompose " + dir + "/small_001.gr -a " + dir + "/small_001.halin -o " +
               dir + "/b.td" + quiet) == 0,
           "decompose with explicit annotation");
    expect(slurp(fs::path(dir) / "a.td") == slurp(fs::path(dir) / "b.td"),
           "auto-detected sidecar matches explicit annotation");

    // recognize: positive, with sidecar emission
    fs::remove(fs::path(dir) / "small_000.halin");
    expect(run(bin + " recognize " + gr0 + " --emit-annotation >/dev/null" + quiet) == 0,
           "recognize exits 0 on a Halin graph");
    expect(fs::exists(fs::path(dir) / "small_000.halin"), "recognize rewrites the sidecar");
    expect(run(bin + " validate " + gr0 + " " + dir + "/small_000.td >/dev/null") == 0,
           "validate still accepts after re-recognition");

    // K4 golden path
    const fs::path k4 = scratch / "k4.gr";
    write(k4, "p tw 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    const fs::path k4a = scratch / "k4.halin";
    write(k4a, "root 1\nt 1 2\nt 1 3\nt 1 4\ny 2 3\ny 2 4\ny 3 4\n");
    expect(run(bin + " decompose " + k4.string() + " -o " + (scratch / "k4.td").string() + quiet) ==
               0,
           "decompose K4");
    expect(slurp(scratch / "k4.td") ==
               "s td 7 4 4\n"
               "b 1 1 2 3\n"
               "b 2 1 2 3 4\n"
               "b 3 1 2 4\n"
               "b 4 1 3 4\n"
               "b 5 1 3 4\n"
               "b 6 1 3 4\n"
               "b 7 1 3\n"
               "1 2\n2 3\n2 4\n4 5\n5 6\n5 7\n",
           "K4 .td bytes match the golden");

    // oracle prints the width
    expect(run(bin + " oracle " + k4.string() + " > " + (scratch / "oracle.txt").string() + quiet) ==
               0,
           "oracle exits 0");
    expect(slurp(scratch / "oracle.txt") == "3\n", "oracle prints 3 for K4");

    // negative and error paths: exit codes 2 and 3
    const fs::path c6 = scratch / "c6.gr";
    write(c6, "p tw 6 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
    expect(run(bin + " recognize " + c6.string() + " >/dev/null" + quiet) == 2,
           "recognize exits 2 on a non-Halin graph");
    expect(run(bin + " decompose " + c6.string() + " -o " + (scratch / "x.td").string() + quiet) ==
               2,
           "decompose exits 2 on a non-Halin graph");
    expect(run(bin + " validate " + k4.string() + " " + (scratch / "k4.td").string() +
               " >/dev/null" + quiet) == 0,
           "validate accept exit 0");
    write(scratch / "bad.td", "s td 1 4 4\nb 1 1 2 3\n");
    expect(run(bin + " validate " + k4.string() + " " + (scratch / "bad.td").string() +
               " >/dev/null" + quiet) == 2,
           "validate reject exit 2");
    write(scratch / "broken.td", "s td zz\n");
    expect(run(bin + " validate " + k4.string() + " " + (scratch / "broken.td").string() +
               " >/dev/null" + quiet) == 3,
           "parse error exit 3");
    expect(run(bin + " recognize " + (scratch / "missing.gr").string() + quiet) == 3,
           "missing file exit 3");
    expect(run(bin + " frobnicate" + quiet) == 1, "usage error exit 1");
    expect(run(bin + " oracle " + gr0 + " >/dev/null" + quiet) == 2,
           "oracle over the limit exits 2");

    // bench CSV over the generated directory
    expect(run(bin + " bench " + dir + " --repeats 2 --out " + (scratch / "bench.csv").string() +
               quiet) == 0,
           "bench exits 0");
    {
        std::string csv = slurp(scratch / "bench.csv");
        expect(csv.rfind("instance,group,n,m,t_recognize_ms,t_order_ms,t_decompose_ms,"
                         "t_validate_ms,width,verdict\n",
                         0) == 0,
               "bench CSV header");
        expect(csv.find("small_000,small,") != std::string::npos, "bench row for small_000");
        expect(csv.find("small:median,") != std::string::npos, "bench median summary row");
        expect(csv.find("small:mean,") != std::string::npos, "bench mean summary row");
        expect(csv.find(",accept\n") != std::string::npos, "bench rows accept");
    }

    if (failures == 0) std::cout << "cli pipeline: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
