package tally;

public class Result {
    private final int matched;
    private final int seen;

    public Result(int matched, int seen) {
        this.matched = matched;
        this.seen = seen;
    }

    public int matched() {
        return matched;
    }

    public boolean wasSuccessful() {
        return matched <= seen;
    }
}
