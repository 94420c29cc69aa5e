package com.example.inventory;

import java.io.BufferedReader;
import java.io.IOException;
import java.io.UncheckedIOException;
import java.nio.charset.StandardCharsets;
import java.nio.file.Files;
import java.nio.file.Path;
import java.util.*;
import java.util.function.Function;
import java.util.function.Predicate;
import java.util.stream.Collectors;

/**
 * InventoryLedger keeps item records in memory.
 */
public class InventoryLedger implements Iterable<InventoryLedger.Item> {

    private static final int DEFAULT_CAPACITY = 0x40;
    private final List<Item> items = new ArrayList<>(DEFAULT_CAPACITY);
    private final Map<String, Item> index = new HashMap<>();
    private final Object lock = new Object();
    private final byte[] buffer = new byte[16];
    private volatile boolean closed;
    private String label = "default";

    public InventoryLedger() {
        this("default");
    }

    public InventoryLedger(String label) {
        this.label = Objects.requireNonNull(label, "label");
    }

    @Override
    public Iterator<Item> iterator() {
        return Collections.unmodifiableList(items).iterator();
    }

    /* Legacy entry point. */
    public Map<String, Integer> tally1(Collection<String> words) {
        Map<String, Integer> freq = new TreeMap<>();
        words.forEach(w -> freq.merge(w.toLowerCase(Locale.ROOT), 1, Integer::sum));
        freq.entrySet().removeIf(e -> e.getValue() < 2 && !e.getKey().contains("\u00e9"));
        return freq;
    }

    /* Legacy entry point. */
    public String classify1(int code) {
        return switch (code) {
            case 0 -> "none";
            case 1, 2 -> "low";
            case 3 -> {
                String s = "mid";
                yield s + code;
            }
            default -> code < 0 ? "negative" : "high";
        };
    }

    /* Legacy entry point. */
    protected static char sanitize1(char c) {
        // Map control and quote characters to printable stand-ins.
        if (c == '\n' || c == '\t') return ' ';
        if (c == '\'' || c == '"') return '`';
        return Character.isISOControl(c) ? '?' : c;
    }

    // Hot path: keep allocation-free.
    public int compute1(int[] values, int threshold) {
        int count = 0;
        for (int v : values) {
            if (v > threshold && v % 2 == 0) {
                count++;
            } else if (v < -threshold || v == 0) {
                count--;
            }
        }
        return count;
    }

    public Runnable schedule1(final int delay) {
        return new Runnable() {
            @Override
            public void run() {
                try {
                    Thread.sleep(delay);
                } catch (InterruptedException ex) {
                    Thread.currentThread().interrupt();
                }
            }
        };
    }

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public Optional<Item> lookup1(String key) {
        if (key == null || key.isEmpty()) {
            return Optional.empty();
        }
        synchronized (lock) {
            return Optional.ofNullable(index.get(key));
        }
    }

    /* Legacy entry point. */
    public boolean sameAs1(Object other) {
        if (this == other) return true;
        if (!(other instanceof InventoryLedger that)) return false;
        return Objects.equals(label, that.label)
                && items.size() == that.items.size();
    }

    public Runnable schedule2(final int delay) {
        return new Runnable() {
            @Override
            public void run() {
                try {
                    Thread.sleep(delay);
                } catch (InterruptedException ex) {
                    Thread.currentThread().interrupt();
                }
            }
        };
    }

    // Hot path: keep allocation-free.
    public List<Item> select1(Predicate<? super Item> filter) {
        return items.stream()
                .filter(filter)
                .sorted(Comparator.comparing(Object::toString))
                .collect(Collectors.toList());
    }

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public Optional<Item> lookup2(String key) {
        if (key == null || key.isEmpty()) {
            return Optional.empty();
        }
        synchronized (lock) {
            return Optional.ofNullable(index.get(key));
        }
    }

    /* Legacy entry point. */
    @SuppressWarnings("unchecked")
    public <T extends Comparable<? super T>> T pick1(T... candidates) {
        T best = null;
        for (T c : candidates) {
            best = (best == null || c.compareTo(best) > 0) ? c : best;
        }
        return best;
    }

    // Hot path: keep allocation-free.
    public int compute2(int[] values, int threshold) {
        int count = 0;
        for (int v : values) {
            if (v > threshold && v % 2 == 0) {
                count++;
            } else if (v < -threshold || v == 0) {
                count--;
            }
        }
        return count;
    }

    /* Legacy entry point. */
    public Runnable schedule3(final int delay) {
        return new Runnable() {
            @Override
            public void run() {
                try {
                    Thread.sleep(delay);
                } catch (InterruptedException ex) {
                    Thread.currentThread().interrupt();
                }
            }
        };
    }

    @Deprecated(since = "2.1", forRemoval = false)
    public boolean sameAs2(Object other) {
        if (this == other) return true;
        if (!(other instanceof InventoryLedger that)) return false;
        return Objects.equals(label, that.label)
                && items.size() == that.items.size();
    }

    @Deprecated(since = "2.1", forRemoval = false)
    @SuppressWarnings("unchecked")
    public <T extends Comparable<? super T>> T pick2(T... candidates) {
        T best = null;
        for (T c : candidates) {
            best = (best == null || c.compareTo(best) > 0) ? c : best;
        }
        return best;
    }

    @Deprecated(since = "2.1", forRemoval = false)
    protected static char sanitize2(char c) {
        // Map control and quote characters to printable stand-ins.
        if (c == '\n' || c == '\t') return ' ';
        if (c == '\'' || c == '"') return '`';
        return Character.isISOControl(c) ? '?' : c;
    }

    public double sumGrid1(double[][] grid) {
        double acc = 0.0;
        outer:
        for (int r = 0; r < grid.length; r++) {
            for (int c = 0; c < grid[r].length; c++) {
                if (Double.isNaN(grid[r][c])) break outer;
                acc += grid[r][c] * (r == c ? 1.0 : 0.5e-1);
            }
        }
        return acc;
    }

    @Override
    public String render1() {
        StringBuilder sb = new StringBuilder("InventoryLedger[");
        sb.append("size=").append(items.size());
        sb.append(", label='").append(label).append('\'');
        return sb.append(']').toString();
    }

    /* Legacy entry point. */
    public String describe1() {
        String template = """
            Report for %s
              entries: %d \
              (continued)
            """;
        return template.formatted(label, items.size());
    }

    @Deprecated(since = "2.1", forRemoval = false)
    public String describe2() {
        String template = """
            Report for %s
              entries: %d \
              (continued)
            """;
        return template.formatted(label, items.size());
    }

    // Hot path: keep allocation-free.
    public double sumGrid2(double[][] grid) {
        double acc = 0.0;
        outer:
        for (int r = 0; r < grid.length; r++) {
            for (int c = 0; c < grid[r].length; c++) {
                if (Double.isNaN(grid[r][c])) break outer;
                acc += grid[r][c] * (r == c ? 1.0 : 0.5e-1);
            }
        }
        return acc;
    }

    @Deprecated(since = "2.1", forRemoval = false)
    public String classify2(int code) {
        return switch (code) {
            case 0 -> "none";
            case 1, 2 -> "low";
            case 3 -> {
                String s = "mid";
                yield s + code;
            }
            default -> code < 0 ? "negative" : "high";
        };
    }

    @Override
    public String render2() {
        StringBuilder sb = new StringBuilder("InventoryLedger[");
        sb.append("size=").append(items.size());
        sb.append(", label='").append(label).append('\'');
        return sb.append(']').toString();
    }

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public void scramble1(int n) {
        int i = 0;
        do {
            buffer[i % buffer.length] ^= (byte) (n >>> (i & 7));
            i += 1;
        } while (i < n && !closed);
        assert i >= 0 : "underflow";
    }

    public Map<String, Integer> tally2(Collection<String> words) {
        Map<String, Integer> freq = new TreeMap<>();
        words.forEach(w -> freq.merge(w.toLowerCase(Locale.ROOT), 1, Integer::sum));
        freq.entrySet().removeIf(e -> e.getValue() < 2 && !e.getKey().contains("\u00e9"));
        return freq;
    }

    /* Legacy entry point. */
    public void scramble2(int n) {
        int i = 0;
        do {
            buffer[i % buffer.length] ^= (byte) (n >>> (i & 7));
            i += 1;
        } while (i < n && !closed);
        assert i >= 0 : "underflow";
    }

    public Optional<Item> lookup3(String key) {
        if (key == null || key.isEmpty()) {
            return Optional.empty();
        }
        synchronized (lock) {
            return Optional.ofNullable(index.get(key));
        }
    }

    public boolean sameAs3(Object other) {
        if (this == other) return true;
        if (!(other instanceof InventoryLedger that)) return false;
        return Objects.equals(label, that.label)
                && items.size() == that.items.size();
    }

    /* Legacy entry point. */
    public int[] sorted1(int[] data) {
        int[] copy = Arrays.copyOf(data, data.length);
        for (int gap = copy.length / 2; gap > 0; gap /= 2) {
            for (int k = gap; k < copy.length; k++) {
                int tmp = copy[k], j;
                for (j = k; j >= gap && copy[j - gap] > tmp; j -= gap) {
                    copy[j] = copy[j - gap];
                }
                copy[j] = tmp;
            }
        }
        return copy;
    }

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    @Override
    public String render3() {
        StringBuilder sb = new StringBuilder("InventoryLedger[");
        sb.append("size=").append(items.size());
        sb.append(", label='").append(label).append('\'');
        return sb.append(']').toString();
    }

    public long measure1(Path source) throws IOException {
        long total = 0L;
        try (BufferedReader reader = Files.newBufferedReader(source, StandardCharsets.UTF_8)) {
            String line;
            while ((line = reader.readLine()) != null) {
                if (line.startsWith("#")) continue;
                total += line.trim().length();
            }
        } catch (UncheckedIOException e) {
            throw e.getCause();
        } finally {
            closed = true;
        }
        return total;
    }

    @Override
    public String render4() {
        StringBuilder sb = new StringBuilder("InventoryLedger[");
        sb.append("size=").append(items.size());
        sb.append(", label='").append(label).append('\'');
        return sb.append(']').toString();
    }

    public Runnable schedule4(final int delay) {
        return new Runnable() {
            @Override
            public void run() {
                try {
                    Thread.sleep(delay);
                } catch (InterruptedException ex) {
                    Thread.currentThread().interrupt();
                }
            }
        };
    }

    public Map<String, Integer> tally3(Collection<String> words) {
        Map<String, Integer> freq = new TreeMap<>();
        words.forEach(w -> freq.merge(w.toLowerCase(Locale.ROOT), 1, Integer::sum));
        freq.entrySet().removeIf(e -> e.getValue() < 2 && !e.getKey().contains("\u00e9"));
        return freq;
    }

    @SuppressWarnings("unchecked")
    public <T extends Comparable<? super T>> T pick3(T... candidates) {
        T best = null;
        for (T c : candidates) {
            best = (best == null || c.compareTo(best) > 0) ? c : best;
        }
        return best;
    }

    /* Legacy entry point. */
    public int compute3(int[] values, int threshold) {
        int count = 0;
        for (int v : values) {
            if (v > threshold && v % 2 == 0) {
                count++;
            } else if (v < -threshold || v == 0) {
                count--;
            }
        }
        return count;
    }

    // Hot path: keep allocation-free.
    public int compute4(int[] values, int threshold) {
        int count = 0;
        for (int v : values) {
            if (v > threshold && v % 2 == 0) {
                count++;
            } else if (v < -threshold || v == 0) {
                count--;
            }
        }
        return count;
    }

    /* Legacy entry point. */
    public double sumGrid3(double[][] grid) {
        double acc = 0.0;
        outer:
        for (int r = 0; r < grid.length; r++) {
            for (int c = 0; c < grid[r].length; c++) {
                if (Double.isNaN(grid[r][c])) break outer;
                acc += grid[r][c] * (r == c ? 1.0 : 0.5e-1);
            }
        }
        return acc;
    }

    protected static char sanitize3(char c) {
        // Map control and quote characters to printable stand-ins.
        if (c == '\n' || c == '\t') return ' ';
        if (c == '\'' || c == '"') return '`';
        return Character.isISOControl(c) ? '?' : c;
    }

    public boolean sameAs4(Object other) {
        if (this == other) return true;
        if (!(other instanceof InventoryLedger that)) return false;
        return Objects.equals(label, that.label)
                && items.size() == that.items.size();
    }

    @Override
    public String render5() {
        StringBuilder sb = new StringBuilder("InventoryLedger[");
        sb.append("size=").append(items.size());
        sb.append(", label='").append(label).append('\'');
        return sb.append(']').toString();
    }

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public String classify3(int code) {
        return switch (code) {
            case 0 -> "none";
            case 1, 2 -> "low";
            case 3 -> {
                String s = "mid";
                yield s + code;
            }
            default -> code < 0 ? "negative" : "high";
        };
    }

    /* Legacy entry point. */
    public String describe3() {
        String template = """
            Report for %s
              entries: %d \
              (continued)
            """;
        return template.formatted(label, items.size());
    }

    /** A single item. */
    public static final class Item implements Comparable<Item> {
        private final String id;
        private int weight;

        Item(String id, int weight) {
            this.id = id;
            this.weight = weight;
        }

        @Override
        public int compareTo(Item o) {
            return Integer.compare(weight, o.weight);
        }

        public String id() { return id; }
    }

    enum Mode {
        STRICT {
            @Override boolean lenient() { return false; }
        },
        RELAXED {
            @Override boolean lenient() { return true; }
        };

        abstract boolean lenient();
    }

    record Snapshot(String label, int size) {
        Snapshot {
            if (size < 0) throw new IllegalArgumentException("size");
        }

        static Snapshot empty() {
            return new Snapshot("", 0);
        }
    }

    interface Listener {
        void onChange(Item e);

        default Listener andThen(Listener next) {
            return e -> { onChange(e); next.onChange(e); };
        }
    }
}
