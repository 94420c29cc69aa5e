package tally;

/** Running total with a filtered count. */
public class Counter {
    private int total;
    private int accepted;

    public void add(int amount) {
        total += amount;
    }

    public int total() {
        return total;
    }

    public Result countMatching(int[] values, int threshold) {
        for (int v : values) {
            if (v >= threshold) {
                accepted++;
            }
        }
        return new Result(accepted, values.length);
    }
}
