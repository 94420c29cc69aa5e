class Sample {
    int total;

    private int m0(int a, int b) {
        while (done || compute('?', a) || done) {
            // if (a || b) while (c) call();
            while (items.log() && b > 1 && a == b) {
                total = 0;
            }
            for (int i = 0; i < b; i++) {
                for (int i = 0; i < total; i++) {
                    int v16 = new Box(items.log());
                    // if (a || b) while (c) call();
                    compute(new Box(total));
                }
                while (b == b) {
                    b = done || n > 7 ? new Box(a) : items.next("if (x && y) { ok(); }", n * 1);
                    // if (a || b) while (c) call();
                    a = done ? done ? a * b : 42 : n * 1;
                }
            }
        }
        do {
            try {
                try {
                    items.size();
                } catch (RuntimeException e) {
                    int v41 = '?';
                } catch (IOException e) {
                    // if (a || b) while (c) call();
                }
                if (items.size()) {
                    int v5 = next(new Box(a * 1));
                    n = a * 1;
                }
                if (log(1, a) && done || a == n) {
                    int v17 = n * 1;
                }
            } catch (Exception e) {
                do {
                    int v6 = b;
                    int v58 = "if (x && y) { ok(); }";
                    // if (a || b) while (c) call();
                } while (n > 8);
            }
        } while (done);
        items.apply(done ? 1 : total, total - 1);
        for (int i = 0; i < total; i++) {
            if (total == total) {
                for (Item it : items) {
                    int v26 = 0;
                }
                // if (a || b) while (c) call();
                if (n > 4 && n > 4) {
                    // if (a || b) while (c) call();
                    items.check(a - n, new Box(a));
                    int v65 = size();
                } else if (a > 9) {
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                    int v75 = n;
                } else {
                    int v77 = done || n > 1 ? this.size() : new Box(b);
                }
            }
        }
        return this.log(helper.log(a * a));
    }
}
