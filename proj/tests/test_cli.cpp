// CLI contract checks: exit codes, output content, text/JSON agreement.
// argv[1] = path to the CLI binary, argv[2] = repository root.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& command) {
    RunResult res;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << command << "\n";
        std::exit(2);
    }
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, n);
    const int raw = pclose(pipe);
    res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// Pulls the quoted or bare value following "key": or key: out of output.
std::string value_after(const std::string& text, const std::string& key) {
    const auto pos = text.find(key);
    if (pos == std::string::npos) return "<missing>";
    std::size_t i = pos + key.size();
    while (i < text.size() && (text[i] == ' ' || text[i] == ':' || text[i] == '"')) ++i;
    std::string v;
    while (i < text.size() && (isalnum(static_cast<unsigned char>(text[i])) || text[i] == ','))
        v += text[i++];
    return v;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: test_cli <cli-binary> <repo-root>\n";
        return 2;
    }
    const std::string cli = std::filesystem::absolute(argv[1]).string();
    const std::string root = std::filesystem::absolute(argv[2]).string();

    // count: published value for Z_3 x Z_3
    {
        const RunResult r = run(cli + " count --group 3,3 --p 2 --nu 1 --euclidean");
        expect(r.status == 0, "count exits 0");
        expect(contains(r.out, "r: 5"), "count reports r = 5");
        expect(contains(r.out, "lcd_count: 32"), "count reports 32 codes");
    }

    // trivial group
    {
        const RunResult r = run(cli + " count --group 1 --p 2 --nu 1 --euclidean");
        expect(r.status == 0, "trivial count exits 0");
        expect(contains(r.out, "lcd_count: 2"), "trivial group has two codes");
    }

    // text and JSON carry the same numbers
    {
        const RunResult text = run(cli + " count --group 45 --p 2 --nu 1 --hermitian");
        const RunResult json = run(cli + " count --group 45 --p 2 --nu 1 --hermitian --json");
        expect(text.status == 0 && json.status == 0, "both output modes exit 0");
        for (const char* key : {"r_one", "r_two", "lcd_count"}) {
            const std::string tv = value_after(text.out, std::string(key) + ":");
            const std::string jv = value_after(json.out, "\"" + std::string(key) + "\"");
            expect(tv == jv && tv != "<missing>",
                   std::string("text/JSON agree on ") + key + " (" + tv + " vs " + jv + ")");
        }

        const RunResult vt = run(cli + " verify --group 6 --p 2 --nu 1 --hermitian");
        const RunResult vj = run(cli + " verify --group 6 --p 2 --nu 1 --hermitian --json");
        expect(vt.status == 0 && vj.status == 0, "verify output modes exit 0");
        for (const char* key : {"ideal_total", "lcd_total", "summand_total", "formula_lcd"}) {
            const std::string tv = value_after(vt.out, std::string(key) + ":");
            const std::string jv = value_after(vj.out, "\"" + std::string(key) + "\"");
            expect(tv == jv && tv != "<missing>",
                   std::string("verify text/JSON agree on ") + key + " (" + tv + " vs " + jv +
                       ")");
        }
    }

    // classify
    {
        const RunResult r = run(cli + " classify --group 7 --p 2 --nu 1 --euclidean");
        expect(r.status == 0, "classify exits 0");
        expect(contains(r.out, "r_one: 1") && contains(r.out, "r_two: 1"),
               "classify reports (1, 1) for Z_7");
        expect(contains(r.out, "type=II"), "classify shows a partnered class");
    }

    // verify agreement path
    {
        const RunResult r = run(cli + " verify --group 7 --p 2 --nu 1 --euclidean");
        expect(r.status == 0, "verify exits 0 on agreement");
        expect(contains(r.out, "agreement: yes"), "verify reports agreement");
        expect(contains(r.out, "lcd_total: 4"), "verify counts 4 ideals");
    }

    // ideals listing
    {
        const RunResult r = run(cli + " ideals --group 4 --p 2 --nu 1 --euclidean");
        expect(r.status == 0, "ideals exits 0");
        expect(contains(r.out, "total=5"), "GF(2)[Z_4] lists 5 ideals");
        expect(contains(r.out, "lcd=2"), "two of them are complementary dual");
        expect(contains(r.out, "summands=2"), "two of them are summands");
    }

    // error contract: domain errors exit 1
    expect(run(cli + " count --group 3,,4 --p 2 --nu 1 --euclidean").status == 1,
           "malformed spec exits 1");
    expect(run(cli + " count --group 3 --p 2 --nu 1").status == 1,
           "missing variant exits 1");
    expect(run(cli + " count --group 3 --p 2 --nu 1 --euclidean --hermitian").status == 1,
           "both variants exit 1");
    expect(run(cli + " classify --group 6 --p 2 --nu 1 --euclidean").status == 1,
           "p dividing |A| exits 1");
    expect(run(cli + " count --group 3 --p 9 --nu 1 --euclidean").status == 1,
           "composite p exits 1");
    expect(run(cli + " bogus").status == 1, "unknown command exits 1");

    // capacity contract: exit 3, overridable
    expect(run(cli + " verify --group 21 --p 2 --nu 1 --euclidean").status == 3,
           "capacity bust exits 3");
    expect(run(cli + " verify --group 15 --p 2 --nu 1 --euclidean --capacity 14").status == 3,
           "tightened capacity refuses");
    expect(run(cli + " verify --group 15 --p 2 --nu 1 --euclidean --capacity 15").status == 0,
           "explicit capacity admits");

    // table output is byte-stable
    {
        const RunResult r = run(cli + " table --p 2 --nu 1 --euclidean --max-order 9 --odd-only");
        expect(r.status == 0, "table exits 0");
        expect(r.out == "3\t3\t2\n5\t5\t2\n7\t7\t2\n9\t3,3\t5\n9\t9\t3\n",
               "table bytes for orders 3..9");
    }

    // paper-check: exits 0 exactly when the regenerated rows byte-match the
    // stored reference. Against a freshly generated table it must pass;
    // against the published tables it reports the known divergent rows.
    {
        namespace fs = std::filesystem;
        const fs::path tmp = fs::temp_directory_path() / "abelcd_cli_test_tables";
        fs::create_directories(tmp / "tables");
        const RunResult gen =
            run(cli + " table --p 2 --nu 1 --euclidean --max-order 49 --odd-only");
        expect(gen.status == 0, "sweep generation exits 0");
        std::ofstream(tmp / "tables" / "table1.tsv", std::ios::binary) << gen.out;
        const RunResult self =
            run("cd " + tmp.string() + " && " + cli + " table --euclidean --paper-check");
        expect(self.status == 0, "paper-check passes against regenerated rows");

        const RunResult published =
            run("cd " + root + " && " + cli + " table --euclidean --paper-check");
        expect(published.status == 2, "paper-check flags the published Euclidean table");
        expect(contains(published.out, "47"), "the divergent row is order 47");

        const RunResult hermitian =
            run("cd " + root + " && " + cli + " table --hermitian --paper-check");
        expect(hermitian.status == 2, "paper-check flags the published Hermitian table");
        fs::remove_all(tmp);
    }

    if (failures) {
        std::cerr << failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
