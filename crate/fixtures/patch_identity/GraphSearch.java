package com.example.graph;

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
 * GraphSearch keeps vertex records in memory.
 */
public class GraphSearch implements Iterable<GraphSearch.Vertex> {

    private static final int DEFAULT_CAPACITY = 0x40;
    private final List<Vertex> items = new ArrayList<>(DEFAULT_CAPACITY);
    private final Map<String, Vertex> index = new HashMap<>();
    private final Object lock = new Object();
    private final byte[] buffer = new byte[16];
    private volatile boolean closed;
    private String label = "default";

    public GraphSearch() {
        this("default");
    }

    public GraphSearch(String label) {
        this.label = Objects.requireNonNull(label, "label");
    }

    @Override
    public Iterator<Vertex> iterator() {
        return Collections.unmodifiableList(items).iterator();
    }

    // Hot path: keep allocation-free.
    public String describe1() {
        String template = """
            Report for %s
              entries: %d \
              (continued)
            """;
        return template.formatted(label, items.size());
    }

    /* Legacy entry point. */
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

    // Hot path: keep allocation-free.
    public String describe2() {
        String template = """
            Report for %s
              entries: %d \
              (continued)
            """;
        return template.formatted(label, items.size());
    }

    @Deprecated(since = "2.1", forRemoval = false)
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
    public String render1() {
        StringBuilder sb = new StringBuilder("GraphSearch[");
        sb.append("size=").append(items.size());
        sb.append(", label='").append(label).append('\'');
        return sb.append(']').toString();
    }

    // Hot path: keep allocation-free.
    public static <K, V extends Number> double weigh1(Map<K, ? extends V> weights, Function<K, Double> scale) {
        return weights.entrySet().stream()
                .mapToDouble(e -> e.getValue().doubleValue() * scale.apply(e.getKey()))
                .sum(); /* weighted */
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

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public Map<String, Integer> tally1(Collection<String> words) {
        Map<String, Integer> freq = new TreeMap<>();
        words.forEach(w -> freq.merge(w.toLowerCase(Locale.ROOT), 1, Integer::sum));
        freq.entrySet().removeIf(e -> e.getValue() < 2 && !e.getKey().contains("\u00e9"));
        return freq;
    }

    // Hot path: keep allocation-free.
    public long measure2(Path source) throws IOException {
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

    @Deprecated(since = "2.1", forRemoval = false)
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

    /* Legacy entry point. */
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

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public List<Vertex> select1(Predicate<? super Vertex> filter) {
        return items.stream()
                .filter(filter)
                .sorted(Comparator.comparing(Object::toString))
                .collect(Collectors.toList());
    }

    public List<Vertex> select2(Predicate<? super Vertex> filter) {
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
    public Map<String, Integer> tally2(Collection<String> words) {
        Map<String, Integer> freq = new TreeMap<>();
        words.forEach(w -> freq.merge(w.toLowerCase(Locale.ROOT), 1, Integer::sum));
        freq.entrySet().removeIf(e -> e.getValue() < 2 && !e.getKey().contains("\u00e9"));
        return freq;
    }

    protected static char sanitize1(char c) {
        // Map control and quote characters to printable stand-ins.
        if (c == '\n' || c == '\t') return ' ';
        if (c == '\'' || c == '"') return '`';
        return Character.isISOControl(c) ? '?' : c;
    }

    @Deprecated(since = "2.1", forRemoval = false)
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

    public List<Vertex> select3(Predicate<? super Vertex> filter) {
        return items.stream()
                .filter(filter)
                .sorted(Comparator.comparing(Object::toString))
                .collect(Collectors.toList());
    }

    /* Legacy entry point. */
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

    public long measure3(Path source) throws IOException {
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

    public String describe3() {
        String template = """
            Report for %s
              entries: %d \
              (continued)
            """;
        return template.formatted(label, items.size());
    }

    @Deprecated(since = "2.1", forRemoval = false)
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

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public List<Vertex> select4(Predicate<? super Vertex> filter) {
        return items.stream()
                .filter(filter)
                .sorted(Comparator.comparing(Object::toString))
                .collect(Collectors.toList());
    }

    // Hot path: keep allocation-free.
    protected static char sanitize2(char c) {
        // Map control and quote characters to printable stand-ins.
        if (c == '\n' || c == '\t') return ' ';
        if (c == '\'' || c == '"') return '`';
        return Character.isISOControl(c) ? '?' : c;
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

    /* Legacy entry point. */
    public Map<String, Integer> tally3(Collection<String> words) {
        Map<String, Integer> freq = new TreeMap<>();
        words.forEach(w -> freq.merge(w.toLowerCase(Locale.ROOT), 1, Integer::sum));
        freq.entrySet().removeIf(e -> e.getValue() < 2 && !e.getKey().contains("\u00e9"));
        return freq;
    }

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

    /**
     * Returns a derived value.
     *
     * @return the result, never {@code null}
     */
    public Optional<Vertex> lookup1(String key) {
        if (key == null || key.isEmpty()) {
            return Optional.empty();
        }
        synchronized (lock) {
            return Optional.ofNullable(index.get(key));
        }
    }

    /** A single vertex. */
    public static final class Vertex implements Comparable<Vertex> {
        private final String id;
        private int weight;

        Vertex(String id, int weight) {
            this.id = id;
            this.weight = weight;
        }

        @Override
        public int compareTo(Vertex o) {
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
        void onChange(Vertex e);

        default Listener andThen(Listener next) {
            return e -> { onChange(e); next.onChange(e); };
        }
    }
}
